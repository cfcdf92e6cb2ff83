#include "dilute/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "dilute/combinatorics.hpp"
#include "dilute/errors.hpp"
#include "dilute/series.hpp"
#include "dilute/walks.hpp"

namespace dilute {

namespace {

CheckResult check(const std::string& name, bool hard, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    r.hard = hard;
    try {
        r.detail = body();  // empty detail = pass
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

std::string series_vs_enumeration(int s_max, int enum_max) {
    SeriesParams p;
    p.order = static_cast<std::size_t>(s_max);
    const TruncatedSeries f = solve_moment_series(p);
    EnumOptions opt;
    opt.max_s = enum_max;
    for (int s = 1; s <= s_max; ++s) {
        const UPolynomial counted = count_24star(s, opt);
        if (!(counted == f.coeff(static_cast<std::size_t>(s))))
            return "mismatch at s=" + std::to_string(s) + ": series " +
                   f.coeff(s).to_string() + " vs enumeration " + counted.to_string();
    }
    return {};
}

std::string catalan_specialization(std::size_t order) {
    SeriesParams p;
    p.order = order;
    p.u_value = Rational(0);
    const TruncatedSeries f0 = solve_moment_series(p);
    const TruncatedSeries cat = solve_catalan(order);
    if (!(f0 == cat)) return "u=0 series differs from the Catalan series";
    return {};
}

std::string catalan_recurrence(std::size_t order) {
    const TruncatedSeries f = solve_catalan(order);
    for (std::size_t k = 1; k <= order; ++k) {
        UPolynomial sum;
        for (std::size_t j = 0; j < k; ++j) sum += f.coeff(k - 1 - j) * f.coeff(j);
        if (!(sum == f.coeff(k))) return "t_k recurrence fails at k=" + std::to_string(k);
    }
    return {};
}

std::string residual_zero(std::size_t order) {
    SeriesParams p;
    p.order = order;
    const TruncatedSeries f = solve_moment_series(p);
    const TruncatedSeries r = moment_equation_residual(f, std::nullopt);
    if (!(r == TruncatedSeries(order))) return "nonzero residual";
    return {};
}

std::string integrality_and_monotonicity(std::size_t order) {
    SeriesParams p;
    p.order = order;
    const TruncatedSeries f = solve_moment_series(p);
    const std::vector<Rational> grid{Rational(0), Rational(1, 7), Rational(1, 2), Rational(3)};
    for (std::size_t s = 0; s <= order; ++s) {
        if (!f.coeff(s).all_coeffs_nonnegative_integers())
            return "non-integral coefficient at s=" + std::to_string(s);
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (f.coeff(s).evaluate(grid[i]) < f.coeff(s).evaluate(grid[i - 1]))
                return "mhat_s not monotone in u at s=" + std::to_string(s);
    }
    return {};
}

std::string one_multiedge_oracle(int s_max, int enum_max) {
    EnumOptions opt;
    opt.max_s = enum_max;
    for (int s = 2; s <= s_max; ++s)
        for (int m = 1; m <= s; ++m) {
            ProfileDescriptor d;
            d.kind = ProfileKind::one_edge_total_mult;
            d.m = m;
            if (count_profile(s, d, opt) != n_one_multiedge(s, m))
                return "N_s^(1,m) enumeration vs closed form at s=" + std::to_string(s) +
                       " m=" + std::to_string(m);
        }
    return {};
}

std::string lemma_32_sweep(int s_max, int enum_max) {
    EnumOptions opt;
    opt.max_s = enum_max;
    for (int s = 1; s <= s_max; ++s) {
        const auto report = verify_lemma_3_2(s, opt);
        if (!report.counterexamples.empty())
            return std::to_string(report.counterexamples.size()) +
                   " counterexamples at s=" + std::to_string(s) + ", first: " +
                   report.counterexamples.front().to_string();
    }
    return {};
}

std::string exit_degree_audit(unsigned s_max) {
    const auto report = check_exit_degree_bound(s_max);
    // Empirically mapped validity region: the single failure is (1,1).
    if (report.failures.size() == 1 && report.failures[0] == std::make_pair(1u, 1u)) return {};
    std::string detail = "failures:";
    for (const auto& [s, d] : report.failures)
        detail += " (" + std::to_string(s) + "," + std::to_string(d) + ")";
    return detail;
}

std::string rose_base_values(int enum_max) {
    MomentParams params;
    params.n = 100;  // unused by pi, required by the struct
    params.rho = Rational(7, 2);
    params.moments = {Rational(1), Rational(3, 5), Rational(8, 3), Rational(0),
                      Rational(0)};
    EnumOptions opt;
    opt.max_s = enum_max;
    const Rational v4 = params.moment(2), v6 = params.moment(3), rho = params.rho;
    if (rose_weight_sum(2, params, opt) != v4 / rho) return "P(2) != V4/rho";
    if (rose_weight_sum(3, params, opt) != v6 / (rho * rho)) return "P(3) != V6/rho^2";
    if (rose_weight_sum(4, params, opt) != Rational(3) * v4 * v4 / (rho * rho))
        return "P(4) != 3 V4^2/rho^2 (with V8 = 0)";
    return {};
}

std::string decomposition_identity(int enum_max) {
    MomentParams params;
    params.n = 40;
    params.rho = Rational(13, 2);
    params.moments = {Rational(1), Rational(2), Rational(5), Rational(14), Rational(42)};
    EnumOptions opt;
    opt.max_s = enum_max;
    for (int s = 1; s <= 4; ++s) {
        const auto split = decompose_moment(params, s, opt);
        if (split.tree_part + split.non_tree_part != exact_moment(params, s, opt))
            return "tree + non-tree != total at s=" + std::to_string(s);
    }
    if (exact_moment(params, 1, opt) != Rational(params.n - 1) * params.moment(1))
        return "M_2 != (n-1) V_2";
    return {};
}

std::string combinatorics_suite(unsigned range) {
    RootDegreeTable table(range);  // ctor checks (5.2) vs (5.4)
    (void)table;
    de_verify_range(range);
    for (unsigned s = 2; s <= range; ++s) {
        n_12_closed(s);   // checks (5.3) agreement internally
        r_sequence(s);    // checks convolution agreement internally
    }
    const unsigned conv_k = std::min(range, 100u);
    for (unsigned p = 1; p <= 10; ++p) catalan_convolution(conv_k, p);  // checks <= 4^p t_k
    return {};
}

std::string asymptotic_ratio_n12() {
    // N_s^(1,2)/(s t_s) = 1 - 3/(s+2), checked exactly.
    for (const auto& [s, tol_num, tol_den] :
         std::vector<std::tuple<unsigned, long, long>>{{40, 1, 10}, {80, 1, 20}}) {
        const Rational ratio = Rational(n_12_closed(s)) / Rational(Integer(s) * catalan(s));
        const Rational dev = ratio > 1 ? Rational(ratio - 1) : Rational(1 - ratio);
        if (dev > Rational(tol_num, tol_den))
            return "deviation " + fraction_string(dev) + " at s=" + std::to_string(s);
    }
    return {};
}

std::string phi22_ratio_diagnostic() {
    const std::size_t s = 40;
    const TruncatedSeries phi = phi_22(s);
    const Rational ratio =
        phi.coeff(s).coeff(0) / (Rational(static_cast<long>(s * s)) * Rational(catalan(s)));
    const Rational dev = ratio > Rational(1, 2) ? Rational(ratio - Rational(1, 2))
                                                : Rational(Rational(1, 2) - ratio);
    // Slow square-root approach to 1/2; reported, never asserted.
    return "N_s^(2,2)/(s^2 t_s) = " + std::to_string(to_double(ratio)) +
           " at s=40 (|dev| = " + std::to_string(to_double(dev)) + ")";
}

}  // namespace

std::vector<CheckResult> run_selfcheck(bool full, int enum_max) {
    const int s_enum = full ? std::min(enum_max, kEnumHardMax) : 5;
    const unsigned range = full ? 200 : 50;
    std::vector<CheckResult> out;
    out.push_back(check("series==enumeration s<=" + std::to_string(std::min(s_enum, 6)), true,
                        [&] { return series_vs_enumeration(std::min(s_enum, 6), enum_max); }));
    out.push_back(check("catalan specialization s<=32", true,
                        [&] { return catalan_specialization(32); }));
    out.push_back(check("catalan recurrence s<=64", true, [&] { return catalan_recurrence(64); }));
    out.push_back(check("moment equation residual order 24", true, [&] { return residual_zero(24); }));
    out.push_back(check("integrality+monotonicity s<=24", true,
                        [&] { return integrality_and_monotonicity(24); }));
    out.push_back(check("one-multiedge enumeration vs (5.3) s<=5", true,
                        [&] { return one_multiedge_oracle(5, enum_max); }));
    out.push_back(check("5.2 closed-form suite range " + std::to_string(range), true,
                        [&] { return combinatorics_suite(range); }));
    out.push_back(check("lower bound coefficients s<=32", true, [&] {
        return check_lower_bound(32).all_pass ? "" : "coefficient bound failed";
    }));
    const std::size_t ub_order = full ? 48 : 24;
    out.push_back(check("upper bound certified s<=" + std::to_string(ub_order), true, [&] {
        const std::vector<Rational> grid{Rational(1, 100), Rational(1, 10), Rational(1, 2),
                                         Rational(1)};
        return check_upper_bound(ub_order, grid).all_pass ? "" : "certification failed";
    }));
    out.push_back(check("rose base values P(2..4)", true, [&] { return rose_base_values(enum_max); }));
    out.push_back(check("decomposition identity", true,
                        [&] { return decomposition_identity(enum_max); }));
    out.push_back(check("N^(1,2)/(s t_s) ratio s=40,80", true, [&] { return asymptotic_ratio_n12(); }));
    if (full) {
        out.push_back(check("lemma 3.2 sweep s<=5", true, [&] { return lemma_32_sweep(5, enum_max); }));
        out.push_back(check("exit-degree audit s<=200 (failures == {(1,1)})", true,
                            [&] { return exit_degree_audit(200); }));
        CheckResult diag;
        diag.name = "phi22 ratio at s=40";
        diag.hard = false;
        diag.pass = true;
        diag.detail = phi22_ratio_diagnostic();
        out.push_back(diag);
    }
    return out;
}

int selfcheck_exit_code(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.hard && !r.pass) return 1;
    return 0;
}

}  // namespace dilute
