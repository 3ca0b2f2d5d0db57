#include "rsurf/roots.hpp"

#include <algorithm>
#include <cmath>

#include "rsurf/errors.hpp"

namespace rsurf {

RootSet solve_all_roots(const UnivariatePoly& p, const RootOptions& opts) {
    if (p.degree() < 1) throw DegenerateLeadingCoefficient("polynomial has no roots (degree 0)");
    if (std::abs(p.leading()) < 1e-12 * p.max_abs_coeff())
        throw DegenerateLeadingCoefficient("leading coefficient is numerically zero");

    RootSet out;
    std::vector<Complex> cs = p.coeffs();
    while (cs.size() > 1 && cs.back() == Complex{}) {
        cs.pop_back();
        out.roots.push_back(Complex{});
    }
    const std::size_t deg = cs.size() - 1;
    if (deg == 0) return out;

    const Complex lead = cs.front();
    for (Complex& c : cs) c /= lead;
    double radius = 0.0;
    for (std::size_t k = 1; k < cs.size(); ++k) radius = std::max(radius, std::abs(cs[k]));
    radius += 1.0;

    auto eval = [&](Complex z) {
        Complex acc{};
        for (Complex c : cs) acc = acc * z + c;
        return acc;
    };

    std::vector<Complex> z(deg);
    const Complex seed(0.4, 0.9);
    Complex power = 1.0;
    for (std::size_t k = 0; k < deg; ++k) {
        z[k] = radius * power;
        power *= seed;
    }

    std::vector<Complex> next(deg);
    out.converged = false;
    for (int it = 1; it <= opts.max_iter; ++it) {
        bool small = true;
        for (std::size_t i = 0; i < deg; ++i) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= z[i] - z[j];
            Complex step = denom == Complex{} ? Complex{} : eval(z[i]) / denom;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = Complex{};
            next[i] = z[i] - step;
            if (std::abs(step) >= opts.tol * std::max(1.0, std::abs(next[i]))) small = false;
        }
        z.swap(next);
        out.iterations = it;
        if (small) {
            out.converged = true;
            break;
        }
    }

    out.roots.insert(out.roots.end(), z.begin(), z.end());
    for (Complex r : out.roots) out.residual = std::max(out.residual, std::abs(p(r)));
    return out;
}

}  // namespace rsurf
