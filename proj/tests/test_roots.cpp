#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rsurf/errors.hpp"
#include "rsurf/roots.hpp"

using namespace rsurf;

TEST_CASE("small examples") {
    const auto a = solve_all_roots(UnivariatePoly({1.0, 0.0, 1.0}));
    CHECK(a.converged);
    CHECK(oracle::same_multiset(a.roots, {Complex(0, 1), Complex(0, -1)}, 1e-12));

    const auto b = solve_all_roots(UnivariatePoly({1.0, -3.0, 2.0}));
    CHECK(oracle::same_multiset(b.roots, {1.0, 2.0}, 1e-12));

    const auto c = solve_all_roots(UnivariatePoly({1.0, 0.0, 0.0, -1.0}));
    const double s = std::sqrt(3.0) / 2.0;
    CHECK(oracle::same_multiset(c.roots, {1.0, Complex(-0.5, s), Complex(-0.5, -s)}, 1e-12));
    // substitution check of the cube roots of unity
    for (Complex r : c.roots) CHECK(std::abs(r * r * r - 1.0) < 1e-12);
}

TEST_CASE("exact zero roots split off") {
    const auto r = solve_all_roots(UnivariatePoly({1.0, 0.0, 0.0, -4.0, 0.0, 0.0, 0.0}));
    CHECK(r.converged);
    const double c = std::cbrt(4.0);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK(oracle::same_multiset(r.roots, {0.0, 0.0, 0.0, c, c * w, c * w * w}, 1e-12));
    CHECK(solve_all_roots(UnivariatePoly({2.0, 0.0})).roots == std::vector<Complex>{0.0});
}

TEST_CASE("degenerate input") {
    CHECK_THROWS_AS(solve_all_roots(UnivariatePoly({5.0})), DegenerateLeadingCoefficient);
    CHECK_THROWS_AS(solve_all_roots(UnivariatePoly({1e-14, 1.0, 2.0})), DegenerateLeadingCoefficient);
}

TEST_CASE("non-convergence is reported, not thrown") {
    const auto r = solve_all_roots(UnivariatePoly::from_roots(std::vector<Complex>{1.0, 1.0, 1.0, 2.0}),
                                   RootOptions{1e-12, 3});
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
    CHECK(r.roots.size() == 4);
    CHECK(r.residual > 0.0);
}

TEST_CASE("random well-separated polynomials: residual and coefficient recovery") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(1, 8);
    int tested = 0;
    while (tested < 200) {
        const int n = deg(rng);
        std::vector<Complex> roots;
        for (int k = 0; k < n; ++k) roots.emplace_back(3.0 * u(rng), 3.0 * u(rng));
        if (n > 1 && oracle::min_pairwise_gap(roots) < 0.1) continue;
        const Complex lead(1.0 + u(rng), u(rng));
        const auto p = UnivariatePoly::from_roots(roots, lead);
        const auto r = solve_all_roots(p);
        ++tested;
        REQUIRE(r.converged);
        REQUIRE(r.roots.size() == static_cast<std::size_t>(n));
        CHECK(r.residual <= 1e-8 * (1.0 + p.max_abs_coeff()));
        const auto back = UnivariatePoly::from_roots(r.roots, lead);
        for (int i = 0; i <= n; ++i)
            CHECK(std::abs(back.coeffs()[static_cast<std::size_t>(i)] - p.coeffs()[static_cast<std::size_t>(i)]) <=
                  1e-6 * p.max_abs_coeff());
    }
}

TEST_CASE("deterministic") {
    const UnivariatePoly p({Complex(1, 2), 3.0, Complex(0, -1), 7.0, 0.5});
    const auto a = solve_all_roots(p);
    const auto b = solve_all_roots(p);
    CHECK(a.roots == b.roots);
    CHECK(a.iterations == b.iterations);
}
