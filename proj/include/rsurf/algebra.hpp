#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rsurf {

using Complex = std::complex<double>;

/// Dense univariate polynomial over the complex numbers.
///
/// Coefficients are stored degree-descending: coeffs()[0] multiplies
/// z^degree(). Leading zeros are stripped on construction, so the leading
/// coefficient is nonzero unless this is the zero polynomial {0}.
class UnivariatePoly {
public:
    UnivariatePoly();
    explicit UnivariatePoly(std::vector<Complex> coeffs_descending);

    static UnivariatePoly constant(Complex c);
    /// Monomial c * z^power.
    static UnivariatePoly monomial(Complex c, int power);
    /// (z - r_0)(z - r_1)... scaled by lead.
    static UnivariatePoly from_roots(std::span<const Complex> roots, Complex lead = 1.0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex leading() const { return coeffs_.front(); }
    /// Coefficient of z^power (0 when power exceeds the degree).
    Complex coeff_of_power(int power) const;

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }
    double max_abs_coeff() const;

    Complex operator()(Complex z) const;
    UnivariatePoly derivative() const;

    /// Zero every coefficient with magnitude <= rel_tol * max_abs_coeff(),
    /// then strip leading zeros.
    UnivariatePoly chopped(double rel_tol) const;

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(Complex s, const UnivariatePoly& p);
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

private:
    void normalize();
    std::vector<Complex> coeffs_;
};

/// Quotient and remainder of polynomial long division. Throws
/// std::invalid_argument when the divisor is the zero polynomial.
std::pair<UnivariatePoly, UnivariatePoly> divide(const UnivariatePoly& num,
                                                 const UnivariatePoly& den);

/// f(x, y) = sum_k a[k](x) * y^(n-k), k = 0..n.
///
/// A curve additionally requires n >= 1 and a[0] != 0 (see is_curve()).
/// Derived polynomials such as f_x keep the layout of f and may have a
/// vanishing leading coefficient.
struct BivariatePoly {
    int n = 0;
    std::vector<UnivariatePoly> a;

    BivariatePoly() = default;
    explicit BivariatePoly(std::vector<UnivariatePoly> coeffs_by_y);

    /// x-degree m_k of a[k].
    int m(int k) const { return a[static_cast<std::size_t>(k)].degree(); }
    bool is_curve() const { return n >= 1 && !a.front().is_zero(); }
    double max_abs_coeff() const;

    Complex operator()(Complex x, Complex y) const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
};

/// p(y) = f(x, y) for fixed x. Degree drops when a_0(x) vanishes.
UnivariatePoly fiber_poly(const BivariatePoly& f, Complex x);

/// Formal partial derivatives (f_x, f_y). f_x keeps y-degree n, f_y has n-1.
std::pair<BivariatePoly, BivariatePoly> partials(const BivariatePoly& f);

/// Sylvester resultant of two univariate polynomials of the given formal
/// degrees (leading coefficients may vanish), by pivoted elimination.
Complex sylvester_resultant(std::span<const Complex> p, std::span<const Complex> q);

/// y-discriminant of f as a polynomial in x, normalized as Res_y(f, f_y) / a_0.
///
/// The resultant is recovered by evaluating Sylvester determinants at roots
/// of unity and interpolating with an inverse DFT. Returns the zero
/// polynomial when f is not squarefree in y.
UnivariatePoly discriminant_x(const BivariatePoly& f);

/// Human-readable and re-parseable rendering, e.g. "(1+0*i)*y^2 + (-1+0*i)*x".
std::string to_string(const BivariatePoly& f);
std::string to_string(Complex c);

}  // namespace rsurf
