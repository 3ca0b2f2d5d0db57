#pragma once

#include <vector>

#include "rsurf/algebra.hpp"
#include "rsurf/roots.hpp"

namespace rsurf {

/// Exponent used in the coefficient bounds atilde_k.
enum class CoefficientExponent {
    fibre_degree,  // (|x1| + rho)^(n - l)
    x_degree,      // (|x1| + rho)^(m_k - l)
};

struct BoundConfig {
    double rho_factor = 0.5;   // rho = rho_factor * distance to the nearest critical x
    double r_max = 10.0;       // stands in for that distance when no critical x exists
    CoefficientExponent exponent = CoefficientExponent::fibre_degree;
    RootOptions roots{};
};

/// Per-curve ingredients of the epsilon-delta bound, computed once.
struct CurveGlobals {
    BivariatePoly f;
    BivariatePoly f_x;
    BivariatePoly f_y;
    UnivariatePoly discriminant;
    std::vector<Complex> a0_zeros;    // with multiplicity, m_0 entries
    std::vector<Complex> disc_zeros;
    std::vector<std::vector<double>> abs_coeffs;  // |a_kl|, degree-descending in l

    int n() const { return f.n; }
};

/// Throws CurveNotSquarefree when the discriminant vanishes identically and
/// NumericError when a global root solve fails.
CurveGlobals compute_globals(const BivariatePoly& f, const RootOptions& roots = {});

/// Distance from x1 to the nearest zero of a_0 or of the discriminant
/// (r_max when there are none).
double critical_distance(const CurveGlobals& globals, Complex x1, double r_max);

/// rho_factor * critical_distance(...); 0 on a critical point.
double rho_at(const CurveGlobals& globals, Complex x1, double rho_factor, double r_max = 10.0);

struct PointBound {
    double rho = 0.0;
    double Y = 0.0;
    double M = 0.0;
    std::vector<double> atilde;
    double epsilon = 0.0;
    double delta = 0.0;
    bool singular = false;
};

/// epsilon/delta at x1 from its solved fibre.
///
/// Singular (delta = 0) when the solve did not converge, the fibre lost a
/// root to a vanishing a_0, two fibre values coincide, or rho is 0. A single
/// sheet (n = 1) has epsilon = +inf and delta = rho.
PointBound point_bound(const CurveGlobals& globals, Complex x1, const RootSet& fiber,
                       const BoundConfig& cfg = {});

/// delta(epsilon, rho, Y, M), clamped to [0, rho].
///
/// Evaluated as 2 rho eps / (sqrt((rho Y - eps)^2 + 4 eps M) + rho Y + eps),
/// which is the closed form with the numerator rationalized; it has no
/// removable singularity at M = rho Y.
double delta_formula(double epsilon, double rho, double Y, double M);

/// Fibre at x plus its bound: the per-vertex work of the mesher.
struct SolvedPoint {
    RootSet fiber;
    PointBound bound;
};
SolvedPoint solve_point(const CurveGlobals& globals, Complex x, const BoundConfig& cfg = {});

}  // namespace rsurf
