#ifndef DILUTE_COMBINATORICS_HPP
#define DILUTE_COMBINATORICS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dilute/numeric.hpp"

namespace dilute {

// Catalan trees with s edges whose root has exactly d children, computed
// by the recurrence t_s^(d) = t_s^(d-1) - t_{s-1}^(d-2) and cross-checked
// entry by entry against the parity closed form; any disagreement throws.
class RootDegreeTable {
public:
    explicit RootDegreeTable(unsigned s_max);
    unsigned s_max() const { return s_max_; }
    // t_s^(d); zero outside 1 <= d <= s.
    const Integer& at(unsigned s, unsigned d) const;

private:
    unsigned s_max_;
    std::vector<std::vector<Integer>> rows_;  // rows_[s][d]
};

// Closed form for t_s^(d) split by parity of d.
Integer root_degree_closed_form(unsigned s, unsigned d);

// t_s^(d) via recurrence with closed-form cross-check.
Integer catalan_root_degree(unsigned s, unsigned d);

// T_k^(p) = sum over p-part compositions of k of products of Catalan
// numbers.  Asserts T_k^(p) <= 4^p t_k and, via t_{k+p}^(p), agreement
// with the root-degree closed form.
Integer catalan_convolution(unsigned k, unsigned p);

// R_s = 3 (2s-2)! / ((s-2)!(s+1)!); checked against the 3-fold convolution.
Integer r_sequence(unsigned s);

// N_s^(1,m) = (2s)! / ((s-m)!(s+m)!).
Integer n_one_multiedge(unsigned s, unsigned m);

// s t_s (1 - 3/(s+2)); checked against n_one_multiedge(s, 2).
Integer n_12_closed(unsigned s);

// (D_k^(m), E_k^(m)) from the two-step recurrence with base rows
// D_k^(1) = k t_k, E_k^(1) = (k/2) t_{k+1}; both checked against the
// factorial closed forms.
std::pair<Integer, Integer> de_recurrence(unsigned k, unsigned m);

// Runs the D/E recurrence for every 1 <= m <= k <= k_max, checking closed
// forms throughout; throws on the first disagreement.
void de_verify_range(unsigned k_max);

// 4 (2s)! / ((s-4)!(s+4)!), the vertex-sharing double-4-edge closed form.
Integer n_hat_22(unsigned s);

struct CorrectionTerm {
    Rational value;
    Rational v4_sq_component;  // 4 V4^2/rho * (2s)!/((s-4)!(s+4)!)
    Rational v6_component;     // V6/rho * (2s)!/((s-3)!(s+3)!)
};

// Leading 1/rho correction to the moment ratio; the o(chi) remainder is
// not represented.
CorrectionTerm first_correction(unsigned s, const Rational& v4, const Rational& v6,
                                const Rational& rho);

struct ExitDegreeReport {
    unsigned s_max = 0;
    unsigned long checked = 0;
    // (s, d) cells where 4^d t_s^(d) <= 3^d t_s fails.
    std::vector<std::pair<unsigned, unsigned>> failures;
};

// Audits t_s^(d) <= (3/4)^d t_s in the equivalent pure-integer form
// 4^d t_s^(d) <= 3^d t_s over 1 <= d <= s <= s_max.
ExitDegreeReport check_exit_degree_bound(unsigned s_max);

}  // namespace dilute

#endif
