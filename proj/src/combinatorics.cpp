#include "dilute/combinatorics.hpp"

#include <string>

#include "dilute/errors.hpp"

namespace dilute {

namespace {

std::string cell(unsigned s, unsigned d) {
    return "(" + std::to_string(s) + "," + std::to_string(d) + ")";
}

}  // namespace

Integer root_degree_closed_form(unsigned s, unsigned d) {
    if (d < 1 || d > s) throw ConfigError("root_degree_closed_form: need 1 <= d <= s");
    // d = 2m-1: (2m-1) t_{s-m} prod_{i<m} (s+1-m-i)/(s+1-i)
    // d = 2m:        m t_{s-m} prod_{i<m} (s-m-i)/(s+1-i)
    const unsigned m = (d + 1) / 2;
    Rational v(catalan(s - m));
    v *= (d % 2 == 1) ? Rational(2 * m - 1) : Rational(m);
    for (unsigned i = 1; i < m; ++i) {
        const long num = (d % 2 == 1) ? static_cast<long>(s) + 1 - m - i
                                      : static_cast<long>(s) - m - i;
        Rational factor(num, static_cast<long>(s) + 1 - i);
        factor.canonicalize();
        v *= factor;
    }
    if (v.get_den() != 1 || v < 0)
        throw InconsistencyError("root degree closed form non-integral at " + cell(s, d));
    return Integer(v.get_num());
}

RootDegreeTable::RootDegreeTable(unsigned s_max) : s_max_(s_max) {
    if (s_max < 1) throw ConfigError("RootDegreeTable: s_max must be >= 1");
    rows_.resize(s_max + 1);
    for (unsigned s = 1; s <= s_max; ++s) {
        rows_[s].assign(s + 1, Integer(0));
        rows_[s][1] = catalan(s - 1);
        if (s >= 2) rows_[s][2] = catalan(s - 1);
        for (unsigned d = 3; d <= s; ++d)
            rows_[s][d] = rows_[s][d - 1] - rows_[s - 1][d - 2];
        for (unsigned d = 1; d <= s; ++d)
            if (rows_[s][d] != root_degree_closed_form(s, d))
                throw InconsistencyError("t_s^(d) recurrence vs closed form at " + cell(s, d));
    }
}

const Integer& RootDegreeTable::at(unsigned s, unsigned d) const {
    static const Integer zero(0);
    if (s < 1 || s > s_max_ || d < 1 || d > s) return zero;
    return rows_[s][d];
}

Integer catalan_root_degree(unsigned s, unsigned d) {
    if (d < 1 || d > s) throw ConfigError("catalan_root_degree: need 1 <= d <= s");
    return RootDegreeTable(s).at(s, d);
}

Integer catalan_convolution(unsigned k, unsigned p) {
    if (p < 1) throw ConfigError("catalan_convolution: need p >= 1");
    std::vector<Integer> ts(k + 1);
    for (unsigned j = 0; j <= k; ++j) ts[j] = catalan(j);
    std::vector<Integer> conv = ts;  // T^(1)
    for (unsigned q = 2; q <= p; ++q) {
        std::vector<Integer> next(k + 1, Integer(0));
        for (unsigned j = 0; j <= k; ++j)
            for (unsigned i = 0; i <= j; ++i) next[j] += ts[i] * conv[j - i];
        conv = std::move(next);
    }
    const Integer& result = conv[k];
    if (result > int_pow(Integer(4), p) * ts[k])
        throw InconsistencyError("T_k^(p) exceeds 4^p t_k at k=" + std::to_string(k) +
                                 " p=" + std::to_string(p));
    if (result != root_degree_closed_form(k + p, p))
        throw InconsistencyError("T_k^(p) != t_{k+p}^(p) at k=" + std::to_string(k) +
                                 " p=" + std::to_string(p));
    return result;
}

Integer r_sequence(unsigned s) {
    if (s < 2) throw ConfigError("r_sequence: need s >= 2");
    const Integer closed =
        exact_div(Integer(3) * factorial(2 * s - 2), factorial(s - 2) * factorial(s + 1));
    if (closed != catalan_convolution(s - 2, 3))
        throw InconsistencyError("R_s closed form vs convolution at s=" + std::to_string(s));
    return closed;
}

Integer n_one_multiedge(unsigned s, unsigned m) {
    if (m < 1 || m > s) throw ConfigError("n_one_multiedge: need s >= m >= 1");
    return exact_div(factorial(2 * s), factorial(s - m) * factorial(s + m));
}

Integer n_12_closed(unsigned s) {
    if (s < 2) throw ConfigError("n_12_closed: need s >= 2");
    // s t_s (1 - 3/(s+2)) = s (s-1) t_s / (s+2)
    const Integer value =
        exact_div(Integer(s) * Integer(s - 1) * catalan(s), Integer(s + 2));
    if (value != n_one_multiedge(s, 2))
        throw InconsistencyError("N_s^(1,2) closed forms disagree at s=" + std::to_string(s));
    return value;
}

namespace {

Integer de_closed_d(unsigned k, unsigned m) {
    return exact_div(factorial(2 * k), factorial(k - m) * factorial(k + m));
}

Integer de_closed_e(unsigned k, unsigned m) {
    return exact_div(factorial(2 * k + 1), factorial(k - m) * factorial(k + m + 1));
}

// Walks the recurrence D_k^(m) = E_k^(m-1) - D_k^(m-1),
// E_k^(m) = D_{k+1}^(m) - E_k^(m-1) level by level up to m_max, holding one
// k-indexed row per family.  E at level m consumes D at k+1, so the valid
// k-range shrinks by one per level; the base rows are sized k_top + m_max
// so every entry with k <= k_top stays sound through level m_max.
// verify() is called on every (k, m) entry with k <= k_top.
template <typename Check>
std::pair<Integer, Integer> de_run(unsigned k_top, unsigned m_max, Check verify) {
    const unsigned top = k_top + m_max;
    std::vector<Integer> d(top + 1), e(top + 1);
    for (unsigned k = 1; k <= top; ++k) {
        d[k] = Integer(k) * catalan(k);
        e[k] = exact_div(Integer(k) * catalan(k + 1), Integer(2));
        if (k <= k_top) verify(k, 1, d[k], e[k]);
    }
    unsigned e_valid = top;  // E^(m) sound for k <= e_valid
    for (unsigned m = 2; m <= m_max; ++m) {
        std::vector<Integer> dn(top + 1), en(top + 1);
        const unsigned d_valid = e_valid;
        for (unsigned k = m; k <= d_valid; ++k) dn[k] = e[k] - d[k];
        e_valid = d_valid - 1;
        for (unsigned k = m; k <= e_valid; ++k) {
            en[k] = dn[k + 1] - e[k];
            if (k <= k_top) verify(k, m, dn[k], en[k]);
        }
        d = std::move(dn);
        e = std::move(en);
    }
    return {d[k_top], e[k_top]};
}

}  // namespace

std::pair<Integer, Integer> de_recurrence(unsigned k, unsigned m) {
    if (m < 1 || m > k) throw ConfigError("de_recurrence: need k >= m >= 1");
    auto verify = [](unsigned kk, unsigned mm, const Integer& dv, const Integer& ev) {
        if (kk < mm) return;
        if (dv != de_closed_d(kk, mm) || ev != de_closed_e(kk, mm))
            throw InconsistencyError("D/E recurrence vs closed form at k=" +
                                     std::to_string(kk) + " m=" + std::to_string(mm));
    };
    auto [dv, ev] = de_run(k, m, verify);
    return {dv, ev};
}

void de_verify_range(unsigned k_max) {
    auto verify = [](unsigned kk, unsigned mm, const Integer& dv, const Integer& ev) {
        if (kk < mm) return;
        if (dv != de_closed_d(kk, mm) || ev != de_closed_e(kk, mm))
            throw InconsistencyError("D/E recurrence vs closed form at k=" +
                                     std::to_string(kk) + " m=" + std::to_string(mm));
    };
    de_run(k_max, k_max, verify);
}

Integer n_hat_22(unsigned s) {
    if (s < 4) throw ConfigError("n_hat_22: need s >= 4");
    return Integer(4) * exact_div(factorial(2 * s), factorial(s - 4) * factorial(s + 4));
}

CorrectionTerm first_correction(unsigned s, const Rational& v4, const Rational& v6,
                                const Rational& rho) {
    if (s < 4) throw ConfigError("first_correction: need s >= 4");
    if (rho <= 0) throw ConfigError("first_correction: need rho > 0");
    CorrectionTerm t;
    t.v4_sq_component = Rational(4) * v4 * v4 / rho *
        Rational(exact_div(factorial(2 * s), factorial(s - 4) * factorial(s + 4)));
    t.v6_component = v6 / rho *
        Rational(exact_div(factorial(2 * s), factorial(s - 3) * factorial(s + 3)));
    t.value = t.v4_sq_component + t.v6_component;
    return t;
}

ExitDegreeReport check_exit_degree_bound(unsigned s_max) {
    if (s_max < 1) throw ConfigError("check_exit_degree_bound: need s_max >= 1");
    const RootDegreeTable table(s_max);
    ExitDegreeReport report;
    report.s_max = s_max;
    for (unsigned s = 1; s <= s_max; ++s) {
        const Integer rhs_base = catalan(s);
        for (unsigned d = 1; d <= s; ++d) {
            ++report.checked;
            if (int_pow(Integer(4), d) * table.at(s, d) >
                int_pow(Integer(3), d) * rhs_base)
                report.failures.emplace_back(s, d);
        }
    }
    return report;
}

}  // namespace dilute
