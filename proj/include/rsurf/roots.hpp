#pragma once

#include <vector>

#include "rsurf/algebra.hpp"

namespace rsurf {

struct RootOptions {
    double tol = 1e-12;
    int max_iter = 200;
};

/// All roots of a univariate polynomial.
///
/// converged == false is the NonConvergence outcome: roots hold the last
/// iterate and residual its quality, for diagnostics.
struct RootSet {
    std::vector<Complex> roots;
    double residual = 0.0;  // max |p(root)|
    int iterations = 0;
    bool converged = true;
};

/// Weierstrass (Durand-Kerner) simultaneous iteration.
///
/// Starts from r * (0.4 + 0.9i)^k with r = 1 + max |a_k / a_0| and stops once
/// every per-root update falls below tol * max(1, |root|). Roots that are
/// exactly zero (trailing zero coefficients) are split off beforehand and
/// returned first. Throws DegenerateLeadingCoefficient when the degree is 0
/// or |a_0| < 1e-12 * max |a_k|.
RootSet solve_all_roots(const UnivariatePoly& p, const RootOptions& opts = {});

}  // namespace rsurf
