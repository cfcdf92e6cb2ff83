#ifndef DILUTE_UPOLYNOMIAL_HPP
#define DILUTE_UPOLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dilute/numeric.hpp"

namespace dilute {

// Polynomial in u = V4/rho with exact rational coefficients.  Canonical
// form: trailing coefficient nonzero, or empty vector for the zero
// polynomial.
class UPolynomial {
public:
    UPolynomial() = default;
    explicit UPolynomial(Rational constant);
    static UPolynomial monomial(Rational coeff, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    // Coefficient of u^p (0 beyond the degree).
    const Rational& coeff(std::size_t p) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UPolynomial& operator+=(const UPolynomial& o);
    UPolynomial& operator-=(const UPolynomial& o);
    UPolynomial& operator*=(const Rational& c);
    friend UPolynomial operator+(UPolynomial a, const UPolynomial& b) { return a += b; }
    friend UPolynomial operator-(UPolynomial a, const UPolynomial& b) { return a -= b; }
    friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b);
    friend UPolynomial operator*(UPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const UPolynomial& a, const UPolynomial& b) = default;

    // Horner evaluation, exact.
    Rational evaluate(const Rational& u) const;

    bool all_coeffs_nonnegative_integers() const;

    // "2 + 28*u + 5*u^2" style; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace dilute

#endif
