#include "rsurf/mesher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rsurf/errors.hpp"
#include "rsurf/parallel.hpp"

namespace rsurf {

namespace {

// Corner A = 0, B = 1, C = 2 counter-clockwise; midpoint of BC = 3,
// of CA = 4, of AB = 5.
const std::array<RefinementPattern, 8> kPatterns = {{
    {0b000, {{0, 1, 2}}},
    {0b001, {{0, 1, 3}, {0, 3, 2}}},
    {0b010, {{0, 1, 4}, {1, 2, 4}}},
    {0b011, {{0, 1, 3}, {0, 3, 4}, {4, 3, 2}}},
    {0b100, {{0, 5, 2}, {5, 1, 2}}},
    {0b101, {{0, 5, 2}, {5, 1, 3}, {5, 3, 2}}},
    {0b110, {{0, 5, 4}, {5, 1, 4}, {1, 2, 4}}},
    {0b111, {{0, 5, 4}, {5, 1, 3}, {4, 3, 2}, {5, 3, 4}}},
}};

double edge_length(const DomainMesh& mesh, VertexIndex a, VertexIndex b) {
    return std::abs(mesh.vertices[a].x - mesh.vertices[b].x);
}

unsigned split_mask(const DomainMesh& mesh, const DomainTriangle& t, double min_edge_length) {
    unsigned mask = 0;
    for (int j = 0; j < 3; ++j) {
        const auto [a, b] = edge_corners(j);
        const VertexIndex va = t.v[static_cast<std::size_t>(a)];
        const VertexIndex vb = t.v[static_cast<std::size_t>(b)];
        if (edge_too_long(mesh, va, vb) && edge_length(mesh, va, vb) > min_edge_length) mask |= 1u << j;
    }
    return mask;
}

bool any_edge_too_long(const DomainMesh& mesh, const DomainTriangle& t) {
    for (int j = 0; j < 3; ++j) {
        const auto [a, b] = edge_corners(j);
        if (edge_too_long(mesh, t.v[static_cast<std::size_t>(a)], t.v[static_cast<std::size_t>(b)]))
            return true;
    }
    return false;
}

int nearest_index(std::span<const Complex> values, Complex target) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < values.size(); ++l) {
        const double d = std::abs(values[l] - target);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(l);
        }
    }
    return best;
}

}  // namespace

const RefinementPattern& refinement_pattern(unsigned mask) {
    if (mask > 7) throw std::out_of_range("refinement mask has 3 bits");
    return kPatterns[mask];
}

DomainMesh triangulate_rectangle(const Domain& domain, int grid) {
    if (grid < 1) throw std::invalid_argument("grid must be at least 1");
    if (!(domain.re_max > domain.re_min) || !(domain.im_max > domain.im_min))
        throw std::invalid_argument("domain rectangle is degenerate");

    DomainMesh mesh;
    const auto side = static_cast<VertexIndex>(grid + 1);
    mesh.vertices.reserve(static_cast<std::size_t>(side) * side);
    for (int j = 0; j <= grid; ++j) {
        const double im = domain.im_min + (domain.im_max - domain.im_min) * j / grid;
        for (int i = 0; i <= grid; ++i) {
            const double re = domain.re_min + (domain.re_max - domain.re_min) * i / grid;
            DomainVertex v;
            v.x = Complex(re, im);
            mesh.vertices.push_back(std::move(v));
        }
    }
    mesh.triangles.reserve(2 * static_cast<std::size_t>(grid) * grid);
    for (VertexIndex j = 0; j < static_cast<VertexIndex>(grid); ++j) {
        for (VertexIndex i = 0; i < static_cast<VertexIndex>(grid); ++i) {
            const VertexIndex v00 = j * side + i;
            const VertexIndex v10 = v00 + 1;
            const VertexIndex v01 = v00 + side;
            const VertexIndex v11 = v01 + 1;
            mesh.triangles.push_back({{v00, v10, v11}, 0});
            mesh.triangles.push_back({{v00, v11, v01}, 0});
        }
    }
    return mesh;
}

bool edge_too_long(double length, double delta_i, double delta_j) {
    return length >= std::min(delta_i, delta_j);
}

bool edge_too_long(const DomainMesh& mesh, VertexIndex i, VertexIndex j) {
    return edge_too_long(edge_length(mesh, i, j), mesh.vertices[i].delta(), mesh.vertices[j].delta());
}

void solve_vertices(DomainMesh& mesh, const CurveGlobals& globals, const MesherConfig& cfg) {
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
        if (!mesh.vertices[i].solved) pending.push_back(i);
    parallel_for(pending.size(), cfg.threads, [&](std::size_t k) {
        DomainVertex& v = mesh.vertices[pending[k]];
        SolvedPoint sp = solve_point(globals, v.x, cfg.bound);
        v.fiber = std::move(sp.fiber);
        v.bound = std::move(sp.bound);
        v.solved = true;
    });
}

RefineResult refine_pass(DomainMesh mesh, const CurveGlobals& globals, const MesherConfig& cfg) {
    std::vector<unsigned> masks(mesh.triangles.size());
    parallel_for(mesh.triangles.size(), cfg.threads, [&](std::size_t t) {
        masks[t] = split_mask(mesh, mesh.triangles[t], cfg.min_edge_length);
    });

    std::vector<EdgeKey> split;
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        for (int j = 0; j < 3; ++j) {
            if (!(masks[t] & (1u << j))) continue;
            const auto [a, b] = edge_corners(j);
            split.push_back(edge_key(mesh.triangles[t].v[static_cast<std::size_t>(a)],
                                     mesh.triangles[t].v[static_cast<std::size_t>(b)]));
        }
    }
    std::sort(split.begin(), split.end());
    split.erase(std::unique(split.begin(), split.end()), split.end());

    RefineResult result;
    result.splits = split.size();
    if (split.empty()) {
        result.mesh = std::move(mesh);
        return result;
    }

    for (const EdgeKey& key : split) {
        if (mesh.edge_midpoints.contains(key)) continue;
        const DomainVertex& a = mesh.vertices[key.first];
        const DomainVertex& b = mesh.vertices[key.second];
        DomainVertex mid;
        mid.x = 0.5 * (a.x + b.x);
        mid.depth = std::max(a.depth, b.depth) + 1;
        mesh.edge_midpoints.emplace(key, static_cast<VertexIndex>(mesh.vertices.size()));
        mesh.vertices.push_back(std::move(mid));
    }
    solve_vertices(mesh, globals, cfg);

    std::vector<DomainTriangle> children;
    children.reserve(mesh.triangles.size() + 3 * split.size());
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        const DomainTriangle& parent = mesh.triangles[t];
        if (masks[t] == 0) {
            children.push_back(parent);
            continue;
        }
        std::array<VertexIndex, 6> local{};
        for (int c = 0; c < 3; ++c) local[static_cast<std::size_t>(c)] = parent.v[static_cast<std::size_t>(c)];
        for (int j = 0; j < 3; ++j) {
            if (!(masks[t] & (1u << j))) continue;
            const auto [a, b] = edge_corners(j);
            local[static_cast<std::size_t>(3 + j)] = mesh.edge_midpoints.at(
                edge_key(parent.v[static_cast<std::size_t>(a)], parent.v[static_cast<std::size_t>(b)]));
        }
        for (const auto& sub : refinement_pattern(masks[t]).sub_triangles) {
            children.push_back({{local[static_cast<std::size_t>(sub[0])], local[static_cast<std::size_t>(sub[1])],
                                 local[static_cast<std::size_t>(sub[2])]},
                                parent.depth + 1});
        }
    }
    mesh.triangles = std::move(children);
    result.mesh = std::move(mesh);
    return result;
}

AssembledTriangle assemble_triangle(std::array<std::span<const Complex>, 3> fibers) {
    const std::size_t n = fibers[0].size();
    if (fibers[1].size() != n || fibers[2].size() != n)
        throw std::invalid_argument("assemble_triangle: fibres of unequal size");

    AssembledTriangle out;
    out.sheets.reserve(n);
    std::vector<char> used1(n, 0), used2(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex y0 = fibers[0][k];
        const int l1 = nearest_index(fibers[1], y0);
        const int l2 = nearest_index(fibers[2], y0);
        if (used1[static_cast<std::size_t>(l1)]++ || used2[static_cast<std::size_t>(l2)]++) out.bijective = false;
        if (nearest_index(fibers[2], fibers[1][static_cast<std::size_t>(l1)]) != l2) ++out.inconsistent_edges;
        out.sheets.push_back({static_cast<int>(k), l1, l2});
    }
    return out;
}

GenerateResult generate_surface(const BivariatePoly& f, const std::string& curve_source,
                                const Domain& domain, const MesherConfig& cfg) {
    return generate_surface(compute_globals(f, cfg.bound.roots), curve_source, domain, cfg);
}

GenerateResult generate_surface(const CurveGlobals& globals, const std::string& curve_source,
                                const Domain& domain, const MesherConfig& cfg) {
    if (cfg.max_depth < 0) throw std::invalid_argument("max_depth must be non-negative");

    GenerateResult out;
    DomainMesh mesh = triangulate_rectangle(domain, cfg.grid);
    solve_vertices(mesh, globals, cfg);
    if (cfg.on_pass) cfg.on_pass(mesh, 0);

    for (int pass = 1; pass <= cfg.max_depth; ++pass) {
        RefineResult r = refine_pass(std::move(mesh), globals, cfg);
        mesh = std::move(r.mesh);
        if (r.splits == 0) break;
        out.stats.passes = pass;
        out.stats.splits_per_pass.push_back(r.splits);
        if (cfg.on_pass) cfg.on_pass(mesh, pass);
    }

    std::vector<char> keep(mesh.triangles.size());
    parallel_for(mesh.triangles.size(), cfg.threads,
                 [&](std::size_t t) { keep[t] = !any_edge_too_long(mesh, mesh.triangles[t]); });

    std::vector<AssembledTriangle> assembled(mesh.triangles.size());
    parallel_for(mesh.triangles.size(), cfg.threads, [&](std::size_t t) {
        if (!keep[t]) return;
        const auto& v = mesh.triangles[t].v;
        assembled[t] = assemble_triangle({std::span<const Complex>(mesh.vertices[v[0]].fiber.roots),
                                          std::span<const Complex>(mesh.vertices[v[1]].fiber.roots),
                                          std::span<const Complex>(mesh.vertices[v[2]].fiber.roots)});
    });

    constexpr VertexIndex kUnused = std::numeric_limits<VertexIndex>::max();
    std::vector<char> used(mesh.vertices.size(), 0);
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        if (!keep[t]) {
            out.discarded.push_back(mesh.triangles[t]);
            continue;
        }
        if (!assembled[t].bijective) {
            ++out.stats.non_bijective;
            keep[t] = 0;
            continue;
        }
        out.stats.inconsistent_edges += static_cast<std::size_t>(assembled[t].inconsistent_edges);
        for (VertexIndex v : mesh.triangles[t].v) used[v] = 1;
    }

    SurfaceMesh& surface = out.surface;
    std::vector<VertexIndex> base(mesh.vertices.size(), kUnused);
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (!used[i]) continue;
        base[i] = static_cast<VertexIndex>(surface.vertices.size());
        for (Complex y : mesh.vertices[i].fiber.roots) surface.vertices.push_back({mesh.vertices[i].x, y});
    }
    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
        if (!keep[t]) continue;
        const auto& v = mesh.triangles[t].v;
        for (const auto& s : assembled[t].sheets) {
            surface.triangles.push_back({base[v[0]] + static_cast<VertexIndex>(s[0]),
                                         base[v[1]] + static_cast<VertexIndex>(s[1]),
                                         base[v[2]] + static_cast<VertexIndex>(s[2])});
        }
        ++out.stats.kept_triangles;
    }

    for (const auto& v : mesh.vertices)
        if (v.singular()) ++out.stats.singular_vertices;
    out.stats.domain_triangles = mesh.triangles.size();
    out.stats.discarded_triangles = out.discarded.size();
    out.stats.empty_output = surface.triangles.empty();

    surface.meta = SurfaceMeta{curve_source, globals.n(), domain, cfg.grid, cfg.max_depth, cfg.bound.rho_factor};
    out.domain_mesh = std::move(mesh);
    return out;
}

std::vector<int> monodromy_permutation(const CurveGlobals& globals, std::span<const Complex> loop,
                                       const BoundConfig& cfg, std::size_t max_steps) {
    if (loop.empty()) throw std::invalid_argument("monodromy loop is empty");
    const int n = globals.n();

    SolvedPoint start = solve_point(globals, loop.front(), cfg);
    if (start.bound.singular) throw StepTooLarge("monodromy loop starts at a singular point");

    std::vector<Complex> targets(loop.begin() + 1, loop.end());
    if (targets.empty() || targets.back() != loop.front()) targets.push_back(loop.front());

    Complex here = loop.front();
    SolvedPoint current = start;
    std::vector<Complex> tracked = start.fiber.roots;
    std::size_t steps = 0;
    for (Complex target : targets) {
        while (here != target) {
            if (++steps > max_steps) throw StepTooLarge("monodromy continuation exceeded the step cap");
            const double delta = current.bound.delta;
            if (!(delta > 0.0)) throw StepTooLarge("monodromy loop passes through a singular point");
            const Complex d = target - here;
            const double len = std::abs(d);
            const double reach = 0.9 * delta;
            const Complex next = len < reach ? target : here + d * (reach / len);

            SolvedPoint at_next = solve_point(globals, next, cfg);
            if (at_next.bound.singular) throw StepTooLarge("monodromy loop passes through a singular point");
            std::vector<Complex> moved(static_cast<std::size_t>(n));
            std::vector<char> taken(static_cast<std::size_t>(n), 0);
            for (int k = 0; k < n; ++k) {
                const int l = nearest_index(at_next.fiber.roots, tracked[static_cast<std::size_t>(k)]);
                if (taken[static_cast<std::size_t>(l)]++)
                    throw StepTooLarge("proximity matching along the loop is not bijective");
                moved[static_cast<std::size_t>(k)] = at_next.fiber.roots[static_cast<std::size_t>(l)];
            }
            tracked = std::move(moved);
            current = std::move(at_next);
            here = next;
        }
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        perm[static_cast<std::size_t>(k)] = nearest_index(start.fiber.roots, tracked[static_cast<std::size_t>(k)]);
    return perm;
}

std::vector<Complex> circle_loop(Complex center, double radius, int segments) {
    if (segments < 3) throw std::invalid_argument("circle loop needs at least 3 segments");
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(segments) + 1);
    for (int s = 0; s < segments; ++s)
        pts.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * s / segments));
    pts.push_back(pts.front());
    return pts;
}

std::string format_cycles(std::span<const int> perm) {
    std::string out;
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s] || perm[s] == static_cast<int>(s)) continue;
        out += '(';
        std::size_t k = s;
        bool first = true;
        while (!seen[k]) {
            seen[k] = 1;
            if (!first) out += ' ';
            out += std::to_string(k + 1);
            first = false;
            k = static_cast<std::size_t>(perm[k]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace rsurf
