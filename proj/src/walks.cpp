#include "dilute/walks.hpp"

#include <algorithm>
#include <set>

#include "dilute/errors.hpp"

namespace dilute {

std::string CanonicalWalk::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters[i]);
    }
    return out;
}

const Rational& MomentParams::moment(unsigned l) const {
    if (l == 0 || l > moments.size())
        throw ConfigError("missing moment V_" + std::to_string(2 * l) +
                          " (moments list has " + std::to_string(moments.size()) +
                          " entries)");
    return moments[l - 1];
}

void MomentParams::validate() const {
    if (n < 2) throw ConfigError("moment params: need n >= 2");
    if (rho <= 0 || rho > Rational(n)) throw ConfigError("moment params: need 0 < rho <= n");
    if (moments.empty()) throw ConfigError("moment params: V_2 is required");
}

namespace {

// DFS state for the canonical enumeration.  Vertices are 1-based letters;
// edge multiplicities live in a flat (max_letters+1)^2 table.
class Enumerator {
public:
    Enumerator(int s, const std::function<void(const CanonicalWalk&)>& emit,
               const EnumOptions& opt)
        : s_(s), steps_(2 * s), emit_(emit), opt_(opt) {
        max_letters_ = s + 1;
        mult_.assign((max_letters_ + 1) * (max_letters_ + 1), 0);
        letters_.reserve(steps_ + 1);
        letters_.push_back(1);
    }

    void run() { extend(1, 0); }

private:
    int& mult(int a, int b) {
        if (a > b) std::swap(a, b);
        return mult_[a * (max_letters_ + 1) + b];
    }

    void extend(int distinct, int odd_edges) {
        const int t = static_cast<int>(letters_.size()) - 1;  // steps taken
        if (t == steps_) {
            // loop invariant: closure and evenness were enforced on the way
            walk_.letters = letters_;
            emit_(walk_);
            return;
        }
        const int current = letters_.back();
        const int remaining = steps_ - t;
        const int cap = std::min(distinct + 1, max_letters_);
        for (int v = 1; v <= cap; ++v) {
            if (v == current) continue;  // no self-loops: b_ii = 0
            const bool fresh_vertex = (v == distinct + 1);
            if (opt_.root_star_only && current != 1 && v != 1) continue;
            int& m = mult(current, v);
            if (opt_.max_total_multiplicity && m + 1 > opt_.max_total_multiplicity)
                continue;
            // A new skeleton edge between two existing vertices closes a cycle.
            if (opt_.tree_only && !fresh_vertex && m == 0) continue;
            const int odd_next = odd_edges + ((m % 2 == 0) ? 1 : -1);
            // Every odd edge needs one more traversal to become even.
            if (odd_next > remaining - 1) continue;
            if (remaining == 1 && v != 1) continue;  // must close at the root
            if (opt_.filter) {
                PartialWalkView view{letters_, v, m + 1, steps_};
                if (!opt_.filter(view)) continue;
            }
            ++m;
            letters_.push_back(v);
            extend(fresh_vertex ? distinct + 1 : distinct, odd_next);
            letters_.pop_back();
            --m;
        }
    }

    int s_;
    int steps_;
    const std::function<void(const CanonicalWalk&)>& emit_;
    const EnumOptions& opt_;
    int max_letters_;
    std::vector<int> mult_;
    std::vector<int> letters_;
    CanonicalWalk walk_;
};

struct StepRecord {
    int from = 0, to = 0;
    std::pair<int, int> couple;
    bool marked = false;
};

std::vector<StepRecord> step_records(const CanonicalWalk& walk) {
    std::map<std::pair<int, int>, int> mult;
    std::vector<StepRecord> steps;
    steps.reserve(walk.letters.size() - 1);
    for (std::size_t t = 1; t < walk.letters.size(); ++t) {
        StepRecord r;
        r.from = walk.letters[t - 1];
        r.to = walk.letters[t];
        r.couple = std::minmax(r.from, r.to);
        r.marked = (++mult[r.couple] % 2 == 1);
        steps.push_back(r);
    }
    return steps;
}

}  // namespace

void enumerate_walks(int s, const std::function<void(const CanonicalWalk&)>& emit,
                     const EnumOptions& options) {
    if (s < 1 || s > options.max_s || s > kEnumHardMax)
        throw ConfigError("enumeration half-length " + std::to_string(s) +
                          " out of range [1, " + std::to_string(std::min(options.max_s, kEnumHardMax)) + "]");
    Enumerator(s, emit, options).run();
}

WalkClassification classify(const CanonicalWalk& walk) {
    WalkClassification c;
    const auto steps = step_records(walk);
    std::map<int, std::vector<int>> arrivals;     // marked arrival times per vertex
    std::map<int, int> exits;                     // marked exits per vertex
    arrivals[1].push_back(0);                     // mute creation of the root
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& st = steps[i];
        ++c.edge_multiplicities[st.couple];
        c.dyck.push_back(st.marked ? 1 : -1);
        if (st.marked) {
            arrivals[st.to].push_back(static_cast<int>(i) + 1);
            ++exits[st.from];
        }
    }
    c.is_even = true;
    for (const auto& [e, m] : c.edge_multiplicities) {
        if (m % 2) c.is_even = false;
        if (m == 4) ++c.four_edge_count;
    }
    for (const auto& [v, times] : arrivals) c.kappa[v] = static_cast<int>(times.size());
    for (const auto& [v, d] : exits) c.max_exit_degree = std::max(c.max_exit_degree, d);
    // Connected by construction, so tree <=> |E_skeleton| == |V| - 1.
    std::set<int> verts(walk.letters.begin(), walk.letters.end());
    c.is_tree_type = (c.edge_multiplicities.size() == verts.size() - 1);
    c.four_edges_disjoint = true;
    std::vector<std::pair<int, int>> fours;
    for (const auto& [e, m] : c.edge_multiplicities)
        if (m == 4) fours.push_back(e);
    for (std::size_t i = 0; i < fours.size() && c.four_edges_disjoint; ++i)
        for (std::size_t j = i + 1; j < fours.size(); ++j)
            if (fours[i].first == fours[j].first || fours[i].first == fours[j].second ||
                fours[i].second == fours[j].first || fours[i].second == fours[j].second) {
                c.four_edges_disjoint = false;
                break;
            }
    c.colors = color_vertices(walk);
    return c;
}

std::map<int, VertexColor> color_vertices(const CanonicalWalk& walk) {
    const auto steps = step_records(walk);
    std::map<int, std::vector<int>> arrivals;
    arrivals[1].push_back(0);
    std::map<std::pair<int, int>, int> first_marked;  // couple -> time of minimal marked edge
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& st = steps[i];
        if (!st.marked) continue;
        arrivals[st.to].push_back(static_cast<int>(i) + 1);
        first_marked.emplace(st.couple, static_cast<int>(i) + 1);
    }
    std::map<int, VertexColor> colors;
    for (const auto& [beta, times] : arrivals) {
        if (times.size() < 2) continue;
        // Any marked re-arrival along a couple's first traversal closes a
        // skeleton cycle; such a vertex is a blue r-vertex outright.
        bool fresh_rearrival = false;
        for (std::size_t i = 1; i < times.size(); ++i)
            if (first_marked.at(steps[times[i] - 1].couple) == times[i]) {
                fresh_rearrival = true;
                break;
            }
        const int t2 = times[1];
        const auto& e2 = steps[t2 - 1];
        // Base couple: creation edge for ordinary vertices; the root's mute
        // creation is tied to the couple of the walk's first step.
        const auto base_couple = (beta == 1) ? steps[0].couple : steps[times[0] - 1].couple;
        VertexColor color;
        if (e2.couple == base_couple) {
            color = VertexColor::green_p;
        } else if (first_marked.at(e2.couple) == t2) {
            color = VertexColor::blue_r;
        } else {
            const int t_min = first_marked.at(e2.couple);
            const auto& emin = steps[t_min - 1];
            if (emin.from != beta)
                throw InconsistencyError("coloring: minimal edge of a repeated couple "
                                         "not oriented out of the vertex, walk " +
                                         walk.to_string());
            const auto& gamma_times = arrivals.at(emin.to);
            const auto pos = std::find(gamma_times.begin(), gamma_times.end(), t_min);
            const int index = static_cast<int>(pos - gamma_times.begin()) + 1;
            color = (index <= 2) ? VertexColor::red_q : VertexColor::blue_r;
        }
        colors[beta] = fresh_rearrival ? VertexColor::blue_r : color;
    }
    return colors;
}

Lemma32Report verify_lemma_3_2(int s, const EnumOptions& options) {
    Lemma32Report report;
    report.s = s;
    enumerate_walks(s, [&](const CanonicalWalk& w) {
        ++report.walks_checked;
        const auto colors = color_vertices(w);
        bool has_q = false, has_r = false;
        for (const auto& [v, c] : colors) {
            has_q = has_q || c == VertexColor::red_q;
            has_r = has_r || c == VertexColor::blue_r;
        }
        if (has_q) {
            ++report.walks_with_q;
            if (!has_r) report.counterexamples.push_back(w);
        }
    }, options);
    return report;
}

Rational weight_monomial(const CanonicalWalk& walk, const MomentParams& params) {
    if (params.rho <= 0) throw ConfigError("weight_monomial: need rho > 0");
    const auto c = classify(walk);
    if (!c.is_even) throw ConfigError("weight_monomial: walk is not even");
    Rational w(1);
    for (const auto& [e, total] : c.edge_multiplicities) {
        const unsigned me = static_cast<unsigned>(total / 2);
        w *= params.moment(me) / rat_pow(params.rho, static_cast<long>(me) - 1) /
             Rational(params.n);
    }
    return w;
}

namespace {

Rational falling_factorial(long n, int k) {
    Rational f(1);
    for (int i = 0; i < k; ++i) f *= Rational(n - i);
    return f;
}

}  // namespace

Rational exact_moment(const MomentParams& params, int s, const EnumOptions& options) {
    params.validate();
    if (s == 0) return Rational(params.n);  // Tr of the identity power
    Rational total(0);
    enumerate_walks(s, [&](const CanonicalWalk& w) {
        std::set<int> verts(w.letters.begin(), w.letters.end());
        total += falling_factorial(params.n, static_cast<int>(verts.size())) *
                 weight_monomial(w, params);
    }, options);
    return total;
}

MomentSplit decompose_moment(const MomentParams& params, int s, const EnumOptions& options) {
    params.validate();
    MomentSplit split{Rational(0), Rational(0)};
    enumerate_walks(s, [&](const CanonicalWalk& w) {
        const auto c = classify(w);
        std::set<int> verts(w.letters.begin(), w.letters.end());
        const Rational contrib = falling_factorial(params.n, static_cast<int>(verts.size())) *
                                 weight_monomial(w, params);
        (c.is_tree_type ? split.tree_part : split.non_tree_part) += contrib;
    }, options);
    return split;
}

UPolynomial count_24star(int s, const EnumOptions& options) {
    EnumOptions opt = options;
    opt.tree_only = true;
    opt.max_total_multiplicity = 4;
    std::vector<Integer> by_p;
    enumerate_walks(s, [&](const CanonicalWalk& w) {
        const auto c = classify(w);
        for (const auto& [e, m] : c.edge_multiplicities)
            if (m != 2 && m != 4) return;
        if (!c.four_edges_disjoint) return;
        const auto p = static_cast<std::size_t>(c.four_edge_count);
        if (by_p.size() <= p) by_p.resize(p + 1, Integer(0));
        ++by_p[p];
    }, opt);
    UPolynomial poly;
    for (std::size_t p = 0; p < by_p.size(); ++p)
        poly += UPolynomial::monomial(Rational(by_p[p]), p);
    return poly;
}

Integer count_profile(int s, const ProfileDescriptor& profile, const EnumOptions& options) {
    EnumOptions opt = options;
    opt.tree_only = true;
    Integer count(0);
    switch (profile.kind) {
        case ProfileKind::one_edge_total_mult: {
            const int m = profile.m;
            if (m < 1 || m > s) throw ConfigError("count_profile: need 1 <= m <= s");
            opt.max_total_multiplicity = 2 * m;
            enumerate_walks(s, [&](const CanonicalWalk& w) {
                const auto c = classify(w);
                int heavy = 0;
                for (const auto& [e, mm] : c.edge_multiplicities) {
                    if (mm == 2 * m && m > 1) ++heavy;
                    else if (mm != 2) return;
                }
                if (m == 1) {
                    count += s;  // distinguished edge among s identical ones
                } else if (heavy == 1) {
                    count += 1;
                }
            }, opt);
            break;
        }
        case ProfileKind::two_four_edges_sharing:
        case ProfileKind::two_four_edges_any: {
            const bool sharing_only = (profile.kind == ProfileKind::two_four_edges_sharing);
            opt.max_total_multiplicity = 4;
            enumerate_walks(s, [&](const CanonicalWalk& w) {
                const auto c = classify(w);
                for (const auto& [e, mm] : c.edge_multiplicities)
                    if (mm != 2 && mm != 4) return;
                if (c.four_edge_count != 2) return;
                if (sharing_only && c.four_edges_disjoint) return;
                count += 1;
            }, opt);
            break;
        }
    }
    return count;
}

Rational rose_weight_sum(int m, const MomentParams& params, const EnumOptions& options) {
    if (m < 1) throw ConfigError("rose_weight_sum: need m >= 1");
    if (params.rho <= 0) throw ConfigError("rose_weight_sum: need rho > 0");
    EnumOptions opt = options;
    opt.root_star_only = true;
    Rational total(0);
    enumerate_walks(m, [&](const CanonicalWalk& w) {
        const auto c = classify(w);
        for (const auto& [e, mm] : c.edge_multiplicities)
            if (mm < 4) return;  // every edge multiple
        Rational pi(1);
        for (const auto& [e, mm] : c.edge_multiplicities) {
            const unsigned me = static_cast<unsigned>(mm / 2);
            pi *= params.moment(me) / rat_pow(params.rho, static_cast<long>(me) - 1);
        }
        total += pi;
    }, opt);
    return total;
}

}  // namespace dilute
