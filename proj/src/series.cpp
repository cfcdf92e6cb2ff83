#include "dilute/series.hpp"

#include <cstddef>

#include "dilute/combinatorics.hpp"
#include "dilute/errors.hpp"

namespace dilute {

TruncatedSeries::TruncatedSeries(std::size_t order)
    : order_(order), coeffs_(order + 1) {}

TruncatedSeries TruncatedSeries::constant(std::size_t order, Rational value) {
    TruncatedSeries s(order);
    s.coeffs_[0] = UPolynomial(std::move(value));
    return s;
}

const UPolynomial& TruncatedSeries::coeff(std::size_t s) const {
    if (s > order_) throw ConfigError("series coefficient index beyond order");
    return coeffs_[s];
}

void TruncatedSeries::set_coeff(std::size_t s, UPolynomial value) {
    if (s > order_) throw ConfigError("series coefficient index beyond order");
    coeffs_[s] = std::move(value);
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw ConfigError("series order mismatch: " + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()));
}

}  // namespace

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t s = 0; s <= a.order(); ++s) {
        UPolynomial c;
        for (std::size_t i = 0; i <= s; ++i) c += a.coeff(i) * b.coeff(s - i);
        r.set_coeff(s, std::move(c));
    }
    return r;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t s = 0; s <= a.order(); ++s) r.set_coeff(s, a.coeff(s) + b.coeff(s));
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (std::size_t s = 0; s <= a.order(); ++s) r.set_coeff(s, a.coeff(s) - b.coeff(s));
    return r;
}

TruncatedSeries series_shift(const TruncatedSeries& a, std::size_t k) {
    TruncatedSeries r(a.order());
    for (std::size_t s = k; s <= a.order(); ++s) r.set_coeff(s, a.coeff(s - k));
    return r;
}

TruncatedSeries series_geom_inverse(const TruncatedSeries& a) {
    // G = 1 + z a G, solved coefficient by coefficient.
    TruncatedSeries g = TruncatedSeries::constant(a.order(), Rational(1));
    for (std::size_t k = 1; k <= a.order(); ++k) {
        UPolynomial c;
        for (std::size_t i = 0; i < k; ++i) c += a.coeff(i) * g.coeff(k - 1 - i);
        g.set_coeff(k, std::move(c));
    }
    return g;
}

TruncatedSeries solve_catalan(std::size_t order) {
    TruncatedSeries f = TruncatedSeries::constant(order, Rational(1));
    for (std::size_t it = 0; it <= order; ++it) {
        TruncatedSeries next =
            series_add(TruncatedSeries::constant(order, Rational(1)),
                       series_shift(series_mul(f, f), 1));
        f = next;
    }
    return f;
}

namespace {

TruncatedSeries moment_rhs(const TruncatedSeries& f, const UPolynomial& u) {
    const std::size_t order = f.order();
    TruncatedSeries g = series_geom_inverse(f);     // 1/(1 - zF)
    TruncatedSeries g2 = series_mul(g, g);
    TruncatedSeries g4 = series_mul(g2, g2);
    TruncatedSeries tail = series_shift(g4, 2);     // z^2 (1-zF)^{-4}
    for (std::size_t s = 0; s <= order; ++s) tail.set_coeff(s, tail.coeff(s) * u);
    return series_add(TruncatedSeries::constant(order, Rational(1)),
                      series_add(series_shift(series_mul(f, f), 1), tail));
}

}  // namespace

TruncatedSeries solve_moment_series(const SeriesParams& params) {
    if (params.u_value && *params.u_value < 0)
        throw ConfigError("u specialization must be >= 0");
    const UPolynomial u = params.u_value
                              ? UPolynomial(*params.u_value)
                              : UPolynomial::monomial(Rational(1), 1);
    TruncatedSeries f = TruncatedSeries::constant(params.order, Rational(1));
    for (std::size_t it = 0; it <= params.order; ++it) f = moment_rhs(f, u);

    // Posts: the defining equation holds through the truncation order, and
    // every coefficient counts walks (non-negative integers).
    const TruncatedSeries zero(params.order);
    if (series_sub(f, moment_rhs(f, u)) != zero)
        throw InconsistencyError("moment series: nonzero residual after convergence");
    if (!params.u_value) {
        for (std::size_t s = 0; s <= params.order; ++s)
            if (!f.coeff(s).all_coeffs_nonnegative_integers())
                throw InconsistencyError("moment series: non-integral coefficient at z^" +
                                         std::to_string(s));
    }
    return f;
}

TruncatedSeries moment_equation_residual(const TruncatedSeries& f,
                                         const std::optional<Rational>& u_value) {
    const UPolynomial u = u_value ? UPolynomial(*u_value)
                                  : UPolynomial::monomial(Rational(1), 1);
    return series_sub(f, moment_rhs(f, u));
}

namespace {

// z^a f^(d) built straight from f's coefficients: coefficient k of
// z^a * d-th derivative of f is fall(k-a+d, d) * f_{k-a+d}, which needs f
// only through the series order when a >= d.
TruncatedSeries shifted_derivative(const TruncatedSeries& f, unsigned d, std::size_t a) {
    TruncatedSeries r(f.order());
    for (std::size_t k = a; k <= f.order(); ++k) {
        const std::size_t j = k - a + d;  // index into f
        if (j > f.order()) break;
        Rational fall(1);
        for (unsigned i = 0; i < d; ++i) fall *= Rational(static_cast<long>(j - i));
        r.set_coeff(k, f.coeff(j) * fall);
    }
    return r;
}

}  // namespace

TruncatedSeries phi_12(std::size_t order) {
    if (order < 2) throw ConfigError("phi_12 requires order >= 2");
    const TruncatedSeries f = solve_catalan(order);
    const TruncatedSeries f2 = series_mul(f, f);
    const TruncatedSeries f3 = series_mul(f2, f);
    const TruncatedSeries f4 = series_mul(f2, f2);
    TruncatedSeries a = series_mul(shifted_derivative(f, 1, 3), f3);  // z^3 f' f^3
    for (std::size_t s = 0; s <= order; ++s) a.set_coeff(s, a.coeff(s) * Rational(2));
    return series_add(a, series_shift(f4, 2));
}

TruncatedSeries phi_22(std::size_t order) {
    if (order < 4) throw ConfigError("phi_22 requires order >= 4");
    const TruncatedSeries f = solve_catalan(order);
    const TruncatedSeries f2 = series_mul(f, f);
    const TruncatedSeries f4 = series_mul(f2, f2);
    const TruncatedSeries f6 = series_mul(f4, f2);
    TruncatedSeries a = series_mul(shifted_derivative(f, 2, 4), f4);  // z^4 f'' f^4
    TruncatedSeries b = series_mul(shifted_derivative(f, 1, 4), f6);  // z^4 f' f^6
    TruncatedSeries r(order);
    for (std::size_t s = 0; s <= order; ++s)
        r.set_coeff(s, a.coeff(s) * Rational(1, 2) + b.coeff(s) * Rational(3));
    for (std::size_t s = 0; s <= order; ++s)
        if (!r.coeff(s).all_coeffs_nonnegative_integers())
            throw InconsistencyError("phi_22: non-integral coefficient at z^" +
                                     std::to_string(s));
    return r;
}

UpperBoundReport check_upper_bound(std::size_t order, const std::vector<Rational>& u_grid) {
    SeriesParams p;
    p.order = order;
    return check_upper_bound(solve_moment_series(p), u_grid);
}

UpperBoundReport check_upper_bound(const TruncatedSeries& f, const std::vector<Rational>& u_grid) {
    for (const auto& u : u_grid)
        if (u < 0) throw ConfigError("check_upper_bound: grid values must be >= 0");
    const std::size_t order = f.order();
    UpperBoundReport report;
    for (std::size_t s = 0; s <= order; ++s) {
        const Rational ts(catalan(s));
        for (const auto& u : u_grid) {
            UpperBoundCell cell;
            cell.s = s;
            cell.u = u;
            cell.ratio = f.coeff(s).evaluate(u) / ts;
            const Rational x = Rational(4) * u * Rational(static_cast<long>(s));
            // Taylor depth doubles until the lower bound certifies the cell.
            for (unsigned terms = 8; terms <= 4096; terms *= 2) {
                if (Rational(4) * exp_lower_bound(x, terms) >= cell.ratio) {
                    cell.pass = true;
                    cell.taylor_terms = terms;
                    break;
                }
            }
            report.all_pass = report.all_pass && cell.pass;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

LowerBoundReport check_lower_bound(std::size_t order) {
    if (order < 2) throw ConfigError("check_lower_bound requires order >= 2");
    SeriesParams p;
    p.order = order;
    return check_lower_bound(solve_moment_series(p));
}

LowerBoundReport check_lower_bound(const TruncatedSeries& f) {
    const std::size_t order = f.order();
    if (order < 2) throw ConfigError("check_lower_bound requires order >= 2");
    LowerBoundReport report;
    for (std::size_t s = 2; s <= order; ++s) {
        const Rational n12(n_one_multiedge(s, 2));
        LowerBoundRow row;
        row.s = s;
        row.u0_is_catalan = (f.coeff(s).coeff(0) == Rational(catalan(s)));
        row.u1_at_least_n12 = (f.coeff(s).coeff(1) >= n12);
        row.u1_equals_n12 = (f.coeff(s).coeff(1) == n12);
        report.all_pass = report.all_pass && row.u0_is_catalan && row.u1_at_least_n12;
        report.rows.push_back(row);
    }
    return report;
}

Rational evaluate_coefficient(const UPolynomial& poly, const Rational& u_value) {
    if (u_value < 0) throw ConfigError("evaluate_coefficient: u must be >= 0");
    return poly.evaluate(u_value);
}

}  // namespace dilute
