#include "dilute/upolynomial.hpp"

#include <algorithm>

namespace dilute {

namespace {
const Rational kZero(0);
}

UPolynomial::UPolynomial(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

UPolynomial UPolynomial::monomial(Rational coeff, std::size_t degree) {
    UPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

const Rational& UPolynomial::coeff(std::size_t p) const {
    return p < coeffs_.size() ? coeffs_[p] : kZero;
}

void UPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPolynomial& UPolynomial::operator+=(const UPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPolynomial& UPolynomial::operator-=(const UPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UPolynomial& UPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
    UPolynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

Rational UPolynomial::evaluate(const Rational& u) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= u;
        acc += *it;
    }
    return acc;
}

bool UPolynomial::all_coeffs_nonnegative_integers() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
        return c.get_den() == 1 && c >= 0;
    });
}

std::string UPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t p = 0; p < coeffs_.size(); ++p) {
        if (coeffs_[p] == 0) continue;
        if (!out.empty()) out += " + ";
        out += fraction_string(coeffs_[p]);
        if (p == 1) out += "*u";
        if (p > 1) out += "*u^" + std::to_string(p);
    }
    return out.empty() ? "0" : out;
}

}  // namespace dilute
