#include "dilute/numeric.hpp"

#include <cctype>
#include <cstddef>

#include "dilute/errors.hpp"

namespace dilute {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw ConfigError("rat_pow: zero base with negative exponent");
        return Rational(1) / rat_pow(base, -exp);
    }
    Rational r(1);
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1UL;
    }
    return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw InconsistencyError("exact_div: zero divisor");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InconsistencyError("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer catalan(unsigned long s) {
    return exact_div(binomial(2 * s, s), Integer(s + 1));
}

std::string fraction_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string fraction_string(const Integer& n) { return n.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    const auto slash = text.find('/');
    try {
        // base fixed at 10: the default base 0 would read leading zeros as octal
        if (slash != std::string::npos) {
            Integer num(text.substr(0, slash), 10);
            Integer den(text.substr(slash + 1), 10);
            if (den == 0) throw ConfigError("zero denominator in '" + text + "'");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) {
            Rational q{Integer(text, 10)};
            return q;
        }
        // decimal: digits.digits -> num / 10^k
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ConfigError("bad rational literal '" + text + "'");
        Rational q(Integer(digits, 10), int_pow(Integer(10), frac_len));
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad rational literal '" + text + "'");
    }
}

double to_double(const Rational& q) { return q.get_d(); }

Rational exp_lower_bound(const Rational& x, unsigned terms) {
    if (x < 0) throw ConfigError("exp_lower_bound: negative argument");
    Rational sum(1);
    Rational term(1);
    for (unsigned k = 1; k <= terms; ++k) {
        term *= x;
        term /= k;
        sum += term;
    }
    return sum;
}

}  // namespace dilute
