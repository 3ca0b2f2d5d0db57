#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsurf/algebra.hpp"
#include "rsurf/bound.hpp"

namespace rsurf {

/// Axis-aligned rectangle in the x-plane.
struct Domain {
    double re_min = -5.0;
    double re_max = 5.0;
    double im_min = -5.0;
    double im_max = 5.0;

    friend bool operator==(const Domain&, const Domain&) = default;
};

using VertexIndex = std::uint32_t;
using EdgeKey = std::pair<VertexIndex, VertexIndex>;  // (smaller, larger)

inline EdgeKey edge_key(VertexIndex a, VertexIndex b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

struct DomainVertex {
    Complex x;
    RootSet fiber;
    PointBound bound;
    int depth = 0;
    bool solved = false;

    double delta() const { return bound.delta; }
    bool singular() const { return bound.singular; }
};

struct DomainTriangle {
    std::array<VertexIndex, 3> v;
    int depth = 0;
};

struct DomainMesh {
    std::vector<DomainVertex> vertices;
    std::vector<DomainTriangle> triangles;
    std::map<EdgeKey, VertexIndex> edge_midpoints;
};

/// Subdivision of one triangle for a 3-bit edge mask; bit j marks the edge
/// opposite corner j. Sub-triangle entries 0..2 name corners, 3 + j the
/// midpoint of edge j. Children keep the parent's orientation.
struct RefinementPattern {
    unsigned mask = 0;
    std::vector<std::array<int, 3>> sub_triangles;
};

const RefinementPattern& refinement_pattern(unsigned mask);

/// Corner pair (a, b) bounding edge j of a triangle.
inline std::pair<int, int> edge_corners(int j) { return {(j + 1) % 3, (j + 2) % 3}; }

/// grid x grid cells, each split along its lower-left to upper-right diagonal.
/// Vertices are row-major from (re_min, im_min) and unsolved.
DomainMesh triangulate_rectangle(const Domain& domain, int grid);

/// |x_i - x_j| >= min(delta_i, delta_j); a singular endpoint (delta 0) always fails.
bool edge_too_long(double length, double delta_i, double delta_j);
bool edge_too_long(const DomainMesh& mesh, VertexIndex i, VertexIndex j);

struct MesherConfig {
    int grid = 16;
    int max_depth = 6;
    /// Edges at or below this length are never split (0 disables the floor).
    double min_edge_length = 0.0;
    BoundConfig bound{};
    /// Worker threads for per-vertex solves and per-triangle work; 0 = all cores.
    unsigned threads = 1;
    /// Called with the mesh after initial solve (pass 0) and after every refine pass.
    std::function<void(const DomainMesh&, int pass)> on_pass;
};

/// Solve fibre and bound at every vertex not yet solved.
void solve_vertices(DomainMesh& mesh, const CurveGlobals& globals, const MesherConfig& cfg);

struct RefineResult {
    DomainMesh mesh;
    std::size_t splits = 0;  // distinct edges split; 0 means a fixed point
};

/// One adaptive subdivision pass. Midpoints are shared through edge_midpoints
/// and created in edge-key order, so the result does not depend on cfg.threads.
RefineResult refine_pass(DomainMesh mesh, const CurveGlobals& globals, const MesherConfig& cfg);

struct AssembledTriangle {
    /// For each sheet k at corner 0: the matching fibre index at corners 0, 1, 2.
    std::vector<std::array<int, 3>> sheets;
    /// False when two sheets matched the same fibre value at corner 1 or 2.
    bool bijective = true;
    /// Sheets whose direct corner 1 -> corner 2 match disagrees with the
    /// two matches through corner 0. Diagnostic only.
    int inconsistent_edges = 0;
};

/// Proximity matching of three fibres (one per triangle corner).
AssembledTriangle assemble_triangle(std::array<std::span<const Complex>, 3> fibers);

struct SurfaceVertex {
    Complex x;
    Complex y;
};

struct SurfaceMeta {
    std::string curve;
    int n = 0;
    Domain domain{};
    int grid = 16;
    int max_depth = 6;
    double rho_factor = 0.5;
};

struct SurfaceMesh {
    std::vector<SurfaceVertex> vertices;
    std::vector<std::array<VertexIndex, 3>> triangles;
    SurfaceMeta meta;
};

struct GenerationStats {
    int passes = 0;
    std::vector<std::size_t> splits_per_pass;
    std::size_t domain_triangles = 0;
    std::size_t kept_triangles = 0;
    std::size_t discarded_triangles = 0;
    std::size_t non_bijective = 0;
    std::size_t inconsistent_edges = 0;
    std::size_t singular_vertices = 0;
    bool empty_output = false;
};

struct GenerateResult {
    SurfaceMesh surface;
    DomainMesh domain_mesh;
    std::vector<DomainTriangle> discarded;
    GenerationStats stats;
};

/// Full mesh generation: globals, initial grid, refine until a fixed point
/// or max_depth passes, discard triangles with a too-long edge, assemble
/// the n sheets over every survivor. Throws CurveNotSquarefree.
GenerateResult generate_surface(const BivariatePoly& f, const std::string& curve_source,
                                const Domain& domain, const MesherConfig& cfg);
GenerateResult generate_surface(const CurveGlobals& globals, const std::string& curve_source,
                                const Domain& domain, const MesherConfig& cfg);

/// Permutation of the fibre at loop.front() obtained by continuing along the
/// closed polyline: perm[k] is the starting index that sheet k lands on.
/// Steps longer than 0.9 * delta are subdivided; throws StepTooLarge when
/// delta vanishes on the path or more than max_steps steps are needed.
std::vector<int> monodromy_permutation(const CurveGlobals& globals, std::span<const Complex> loop,
                                       const BoundConfig& cfg = {}, std::size_t max_steps = 1'000'000);

/// Closed polygon with `segments` edges on the circle |x - center| = radius,
/// starting and ending at center + radius.
std::vector<Complex> circle_loop(Complex center, double radius, int segments = 256);

/// 1-based cycle notation without fixed points, e.g. "(1 2)"; "()" for identity.
std::string format_cycles(std::span<const int> perm);

}  // namespace rsurf
