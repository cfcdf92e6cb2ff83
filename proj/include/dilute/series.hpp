#ifndef DILUTE_SERIES_HPP
#define DILUTE_SERIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dilute/upolynomial.hpp"

namespace dilute {

// Power series in z truncated at a fixed order; coefficient of z^s is a
// UPolynomial.  Arithmetic never changes the order: products are Cauchy
// products truncated at the common order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    static TruncatedSeries constant(std::size_t order, Rational value);

    std::size_t order() const { return order_; }
    const UPolynomial& coeff(std::size_t s) const;
    void set_coeff(std::size_t s, UPolynomial value);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::size_t order_;
    std::vector<UPolynomial> coeffs_;  // size order_+1
};

// Cauchy product truncated at the common order.  Order mismatch is a
// contract violation.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Multiply by z^k (shift up, truncate).
TruncatedSeries series_shift(const TruncatedSeries& a, std::size_t k);
// G with G*(1 - z*a) == 1 up to the truncation order.
TruncatedSeries series_geom_inverse(const TruncatedSeries& a);

// Catalan generating function f = 1 + z f^2; coefficient of z^k is t_k.
TruncatedSeries solve_catalan(std::size_t order);

struct SeriesParams {
    std::size_t order = 0;
    // Specialization of u = V4/rho; when absent the coefficients stay
    // polynomials in the indeterminate u.
    std::optional<Rational> u_value;
};

// Fixed point of F = 1 + z F^2 + z^2 u (1 - zF)^{-4}, started from the
// constant series 1; coefficient s stabilizes after at most s+1 sweeps.
// Coefficient of z^s is the moment coefficient for half-length s.
TruncatedSeries solve_moment_series(const SeriesParams& params);

// Residual F - 1 - zF^2 - z^2 u (1-zF)^{-4}; zero series iff F solves the
// moment equation through its order.
TruncatedSeries moment_equation_residual(const TruncatedSeries& f,
                                         const std::optional<Rational>& u_value);

// 2 z^3 f'(z) f^3(z) + z^2 f^4(z); coefficient of z^s counts tree-type
// walks with a single doubled edge (one edge of total multiplicity 4).
TruncatedSeries phi_12(std::size_t order);

// (z^4/2) f''(z) f^4(z) + 3 z^4 f'(z) f^6(z).  Intermediate half-integer
// coefficients are expected; non-integral final coefficients abort.
TruncatedSeries phi_22(std::size_t order);

struct UpperBoundCell {
    std::size_t s = 0;
    Rational u;
    Rational ratio;        // mhat_s(u)/t_s, exact
    bool pass = false;
    unsigned taylor_terms = 0;  // depth that certified the pass
};

struct UpperBoundReport {
    std::vector<UpperBoundCell> cells;
    bool all_pass = true;
};

// Certifies mhat_s(u)/t_s <= 4 e^{4us} per grid cell.  The exponential is
// replaced by a truncated Taylor sum, which underestimates e^x for x >= 0,
// so a reported pass is an exact proof of the inequality.
UpperBoundReport check_upper_bound(std::size_t order, const std::vector<Rational>& u_grid);
// Same check against an already-solved moment series (u unspecialized).
UpperBoundReport check_upper_bound(const TruncatedSeries& moment_series,
                                   const std::vector<Rational>& u_grid);

struct LowerBoundRow {
    std::size_t s = 0;
    bool u0_is_catalan = false;   // [u^0] mhat_s == t_s
    bool u1_at_least_n12 = false; // [u^1] mhat_s >= N_s^(1,2)
    bool u1_equals_n12 = false;   // recorded, not required
};

struct LowerBoundReport {
    std::vector<LowerBoundRow> rows;
    bool all_pass = true;
};

LowerBoundReport check_lower_bound(std::size_t order);
LowerBoundReport check_lower_bound(const TruncatedSeries& moment_series);

// Exact Horner evaluation at u >= 0.
Rational evaluate_coefficient(const UPolynomial& poly, const Rational& u_value);

}  // namespace dilute

#endif
