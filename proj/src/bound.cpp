#include "rsurf/bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rsurf/errors.hpp"

namespace rsurf {

CurveGlobals compute_globals(const BivariatePoly& f, const RootOptions& roots) {
    if (!f.is_curve()) throw std::invalid_argument("compute_globals requires a curve with n >= 1");
    CurveGlobals g;
    g.f = f;
    std::tie(g.f_x, g.f_y) = partials(f);
    g.discriminant = discriminant_x(f);
    if (g.discriminant.is_zero()) throw CurveNotSquarefree();

    auto zeros_of = [&](const UnivariatePoly& p, const char* what) {
        if (p.degree() < 1) return std::vector<Complex>{};
        RootSet rs = solve_all_roots(p, roots);
        if (!rs.converged) {
            // Multiple zeros converge linearly; give the iteration more room before failing.
            rs = solve_all_roots(p, RootOptions{roots.tol, roots.max_iter * 20});
        }
        if (!rs.converged && rs.residual > 1e-8 * (1.0 + p.max_abs_coeff()))
            throw NumericError(std::string("root solve for ") + what + " did not converge");
        return rs.roots;
    };
    g.a0_zeros = zeros_of(f.a.front(), "leading coefficient");
    g.disc_zeros = zeros_of(g.discriminant, "discriminant");

    for (const auto& ak : f.a) {
        std::vector<double> row;
        row.reserve(ak.coeffs().size());
        for (Complex c : ak.coeffs()) row.push_back(std::abs(c));
        g.abs_coeffs.push_back(std::move(row));
    }
    return g;
}

double critical_distance(const CurveGlobals& globals, Complex x1, double r_max) {
    double d = std::numeric_limits<double>::infinity();
    for (Complex z : globals.a0_zeros) d = std::min(d, std::abs(x1 - z));
    for (Complex z : globals.disc_zeros) d = std::min(d, std::abs(x1 - z));
    return std::isinf(d) ? r_max : d;
}

double rho_at(const CurveGlobals& globals, Complex x1, double rho_factor, double r_max) {
    return rho_factor * critical_distance(globals, x1, r_max);
}

double delta_formula(double epsilon, double rho, double Y, double M) {
    if (epsilon <= 0.0 || rho <= 0.0) return 0.0;
    if (std::isinf(epsilon)) return rho;
    const double rY = rho * Y;
    const double root = std::sqrt((rY - epsilon) * (rY - epsilon) + 4.0 * epsilon * M);
    const double delta = 2.0 * rho * epsilon / (root + rY + epsilon);
    return std::clamp(delta, 0.0, rho);
}

PointBound point_bound(const CurveGlobals& globals, Complex x1, const RootSet& fiber,
                       const BoundConfig& cfg) {
    const int n = globals.n();
    PointBound b;
    b.rho = rho_at(globals, x1, cfg.rho_factor, cfg.r_max);

    auto singular = [&] {
        b.singular = true;
        b.delta = 0.0;
        return b;
    };
    if (!fiber.converged || static_cast<int>(fiber.roots.size()) != n) return singular();
    if (b.rho <= 0.0) return singular();

    if (n == 1) {
        b.epsilon = std::numeric_limits<double>::infinity();
        b.delta = b.rho;
        return b;
    }

    const auto& ys = fiber.roots;
    double min_gap = std::numeric_limits<double>::infinity();
    double scale = 1.0;
    for (std::size_t k = 0; k < ys.size(); ++k) {
        scale = std::max(scale, std::abs(ys[k]));
        for (std::size_t l = k + 1; l < ys.size(); ++l) min_gap = std::min(min_gap, std::abs(ys[k] - ys[l]));
    }
    b.epsilon = 0.5 * min_gap;
    if (b.epsilon <= 1e-10 * scale) return singular();

    for (Complex y : ys) {
        const Complex fy = globals.f_y(x1, y);
        if (fy == Complex{}) return singular();
        b.Y = std::max(b.Y, std::abs(globals.f_x(x1, y) / fy));
    }

    const double reach = std::abs(x1) + b.rho;
    b.atilde.assign(static_cast<std::size_t>(n) + 1, 0.0);
    double a0t = globals.abs_coeffs[0][0];
    for (Complex z : globals.a0_zeros) a0t *= std::abs(z - x1) - b.rho;
    b.atilde[0] = a0t;
    if (!(a0t > 0.0)) return singular();

    for (int k = 1; k <= n; ++k) {
        const auto& row = globals.abs_coeffs[static_cast<std::size_t>(k)];
        const int mk = static_cast<int>(row.size()) - 1;
        double sum = 0.0;
        for (int l = 0; l <= mk; ++l) {
            const int e = cfg.exponent == CoefficientExponent::fibre_degree ? n - l : mk - l;
            sum += row[static_cast<std::size_t>(l)] * std::pow(reach, e);
        }
        b.atilde[static_cast<std::size_t>(k)] = sum;
        b.M = std::max(b.M, std::pow(sum / a0t, 1.0 / k));
    }
    b.M *= 2.0;
    if (!(b.M > 0.0) || !std::isfinite(b.M)) return singular();

    b.delta = delta_formula(b.epsilon, b.rho, b.Y, b.M);
    if (b.delta <= 0.0) return singular();
    return b;
}

SolvedPoint solve_point(const CurveGlobals& globals, Complex x, const BoundConfig& cfg) {
    SolvedPoint sp;
    try {
        sp.fiber = solve_all_roots(fiber_poly(globals.f, x), cfg.roots);
    } catch (const DegenerateLeadingCoefficient&) {
        sp.fiber.converged = false;
    }
    sp.bound = point_bound(globals, x, sp.fiber, cfg);
    return sp;
}

}  // namespace rsurf
