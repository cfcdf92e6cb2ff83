#ifndef DILUTE_NUMERIC_HPP
#define DILUTE_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace dilute {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer int_pow(const Integer& base, unsigned long exp);
Rational rat_pow(const Rational& base, long exp);

// Exact division; throws InconsistencyError if b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);

// Catalan number t_s = (2s)!/(s!(s+1)!).
Integer catalan(unsigned long s);

// "num" or "num/den", canonical form.
std::string fraction_string(const Rational& q);
std::string fraction_string(const Integer& n);

// Accepts "num", "num/den" and plain decimals like "0.25".
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

// Truncated Taylor lower bound for e^x, x >= 0: sum_{k<=terms} x^k/k!.
Rational exp_lower_bound(const Rational& x, unsigned terms);

}  // namespace dilute

#endif
