#include "rsurf/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace rsurf {

UnivariatePoly::UnivariatePoly() : coeffs_{Complex{}} {}

UnivariatePoly::UnivariatePoly(std::vector<Complex> coeffs_descending)
    : coeffs_(std::move(coeffs_descending)) {
    normalize();
}

UnivariatePoly UnivariatePoly::constant(Complex c) { return UnivariatePoly({c}); }

UnivariatePoly UnivariatePoly::monomial(Complex c, int power) {
    std::vector<Complex> cs(static_cast<std::size_t>(power) + 1, Complex{});
    cs.front() = c;
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly UnivariatePoly::from_roots(std::span<const Complex> roots, Complex lead) {
    UnivariatePoly p = constant(lead);
    for (Complex r : roots) p = p * UnivariatePoly({1.0, -r});
    return p;
}

void UnivariatePoly::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](Complex c) { return c != Complex{}; });
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

Complex UnivariatePoly::coeff_of_power(int power) const {
    if (power < 0 || power > degree()) return {};
    return coeffs_[static_cast<std::size_t>(degree() - power)];
}

double UnivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex UnivariatePoly::operator()(Complex z) const {
    Complex acc{};
    for (Complex c : coeffs_) acc = acc * z + c;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (degree() == 0) return {};
    std::vector<Complex> d;
    d.reserve(coeffs_.size() - 1);
    for (int i = 0; i < degree(); ++i)
        d.push_back(coeffs_[static_cast<std::size_t>(i)] * static_cast<double>(degree() - i));
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::chopped(double rel_tol) const {
    const double cutoff = rel_tol * max_abs_coeff();
    std::vector<Complex> cs = coeffs_;
    for (Complex& c : cs)
        if (std::abs(c) <= cutoff) c = Complex{};
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    const int deg = std::max(a.degree(), b.degree());
    std::vector<Complex> cs(static_cast<std::size_t>(deg) + 1);
    for (int p = 0; p <= deg; ++p)
        cs[static_cast<std::size_t>(deg - p)] = a.coeff_of_power(p) + b.coeff_of_power(p);
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a + Complex(-1.0) * b;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Complex> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePoly(std::move(cs));
}

UnivariatePoly operator*(Complex s, const UnivariatePoly& p) {
    std::vector<Complex> cs = p.coeffs_;
    for (Complex& c : cs) c *= s;
    return UnivariatePoly(std::move(cs));
}

std::pair<UnivariatePoly, UnivariatePoly> divide(const UnivariatePoly& num,
                                                 const UnivariatePoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (num.degree() < den.degree()) return {UnivariatePoly{}, num};

    std::vector<Complex> rem = num.coeffs();
    const std::vector<Complex>& d = den.coeffs();
    const std::size_t qlen = rem.size() - d.size() + 1;
    std::vector<Complex> quot(qlen);
    for (std::size_t i = 0; i < qlen; ++i) {
        const Complex q = rem[i] / d[0];
        quot[i] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q * d[j];
    }
    std::vector<Complex> r(rem.begin() + static_cast<std::ptrdiff_t>(qlen), rem.end());
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(r))};
}

BivariatePoly::BivariatePoly(std::vector<UnivariatePoly> coeffs_by_y)
    : n(static_cast<int>(coeffs_by_y.size()) - 1), a(std::move(coeffs_by_y)) {
    if (a.empty()) throw std::invalid_argument("bivariate polynomial needs at least one coefficient");
}

double BivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& p : a) m = std::max(m, p.max_abs_coeff());
    return m;
}

Complex BivariatePoly::operator()(Complex x, Complex y) const {
    Complex acc{};
    for (const auto& ak : a) acc = acc * y + ak(x);
    return acc;
}

UnivariatePoly fiber_poly(const BivariatePoly& f, Complex x) {
    std::vector<Complex> cs;
    cs.reserve(f.a.size());
    for (const auto& ak : f.a) cs.push_back(ak(x));
    return UnivariatePoly(std::move(cs));
}

std::pair<BivariatePoly, BivariatePoly> partials(const BivariatePoly& f) {
    std::vector<UnivariatePoly> fx;
    fx.reserve(f.a.size());
    for (const auto& ak : f.a) fx.push_back(ak.derivative());

    std::vector<UnivariatePoly> fy;
    if (f.n == 0) {
        fy.emplace_back();
    } else {
        for (int k = 0; k < f.n; ++k)
            fy.push_back(Complex(static_cast<double>(f.n - k)) * f.a[static_cast<std::size_t>(k)]);
    }
    return {BivariatePoly(std::move(fx)), BivariatePoly(std::move(fy))};
}

namespace {

Complex determinant(std::vector<Complex> m, std::size_t size) {
    Complex det = 1.0;
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < size; ++r)
            if (std::abs(m[r * size + col]) > std::abs(m[pivot * size + col])) pivot = r;
        if (m[pivot * size + col] == Complex{}) return {};
        if (pivot != col) {
            for (std::size_t c = 0; c < size; ++c) std::swap(m[col * size + c], m[pivot * size + c]);
            det = -det;
        }
        const Complex p = m[col * size + col];
        det *= p;
        for (std::size_t r = col + 1; r < size; ++r) {
            const Complex factor = m[r * size + col] / p;
            if (factor == Complex{}) continue;
            for (std::size_t c = col; c < size; ++c) m[r * size + c] -= factor * m[col * size + c];
        }
    }
    return det;
}

}  // namespace

Complex sylvester_resultant(std::span<const Complex> p, std::span<const Complex> q) {
    const std::size_t dp = p.size() - 1;
    const std::size_t dq = q.size() - 1;
    const std::size_t size = dp + dq;
    if (size == 0) return 1.0;
    std::vector<Complex> m(size * size);
    // dq shifted rows of p followed by dp shifted rows of q
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t j = 0; j < p.size(); ++j) m[r * size + r + j] = p[j];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t j = 0; j < q.size(); ++j) m[(dq + r) * size + r + j] = q[j];
    return determinant(std::move(m), size);
}

UnivariatePoly discriminant_x(const BivariatePoly& f) {
    if (!f.is_curve()) throw std::invalid_argument("discriminant_x requires a curve with n >= 1");
    const auto fy = partials(f).second;

    int max_m = 0;
    for (int k = 0; k <= f.n; ++k) max_m = std::max(max_m, f.m(k));
    const int bound = (2 * f.n - 1) * max_m;
    const std::size_t samples = static_cast<std::size_t>(bound) + 1;

    // Res(x_j) at x_j = w^j, w = exp(2 pi i / samples); coefficients by inverse DFT.
    std::vector<Complex> values(samples);
    std::vector<Complex> p(static_cast<std::size_t>(f.n) + 1);
    std::vector<Complex> q(static_cast<std::size_t>(f.n));
    for (std::size_t j = 0; j < samples; ++j) {
        const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                              static_cast<double>(samples));
        for (std::size_t k = 0; k < p.size(); ++k) p[k] = f.a[k](x);
        for (std::size_t k = 0; k < q.size(); ++k) q[k] = fy.a[k](x);
        values[j] = sylvester_resultant(p, q);
    }
    std::vector<Complex> ascending(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j < samples; ++j)
            acc += values[j] * std::polar(1.0, -2.0 * std::numbers::pi *
                                                    static_cast<double>((j * k) % samples) /
                                                    static_cast<double>(samples));
        ascending[k] = acc / static_cast<double>(samples);
    }
    std::vector<Complex> descending(ascending.rbegin(), ascending.rend());
    UnivariatePoly resultant(std::move(descending));

    // Resultant is homogeneous of degree 2n-1 in the coefficients of f.
    const double scale = std::pow(std::max(1.0, f.max_abs_coeff()), 2 * f.n - 1);
    if (resultant.max_abs_coeff() < 1e-12 * scale) return {};
    resultant = resultant.chopped(1e-10);

    const UnivariatePoly disc = divide(resultant, f.a.front()).first;
    return disc.chopped(1e-10);
}

std::string to_string(Complex c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.17g+%.17g*i)", c.real(), c.imag());
    return buf;
}

std::string to_string(const BivariatePoly& f) {
    std::string out;
    for (int k = 0; k <= f.n; ++k) {
        const auto& ak = f.a[static_cast<std::size_t>(k)];
        for (int l = 0; l <= ak.degree(); ++l) {
            const Complex c = ak.coeffs()[static_cast<std::size_t>(l)];
            if (c == Complex{}) continue;
            if (!out.empty()) out += " + ";
            out += to_string(c);
            const int px = ak.degree() - l;
            const int py = f.n - k;
            if (px > 0) out += "*x^" + std::to_string(px);
            if (py > 0) out += "*y^" + std::to_string(py);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace rsurf
