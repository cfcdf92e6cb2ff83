#ifndef DILUTE_WALKS_HPP
#define DILUTE_WALKS_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dilute/numeric.hpp"
#include "dilute/upolynomial.hpp"

namespace dilute {

// Default ceiling for full enumeration (walks of 2s steps).  Configurable
// upward by callers; the CLI warns beyond it.
inline constexpr int kEnumDefaultMax = 7;
inline constexpr int kEnumHardMax = 12;

// Closed even walk in first-appearance letter encoding: letters[0] ==
// letters[2s] == 1, a label seen for the first time equals 1 + number of
// distinct labels seen before it, and no step repeats a vertex.
struct CanonicalWalk {
    std::vector<int> letters;

    int half_length() const { return static_cast<int>(letters.size() - 1) / 2; }
    std::string to_string() const;  // comma-separated letters

    friend bool operator==(const CanonicalWalk& a, const CanonicalWalk& b) = default;
};

enum class VertexColor { none, green_p, blue_r, red_q };

struct WalkClassification {
    // Unordered vertex pair -> total traversal count (even for even walks).
    std::map<std::pair<int, int>, int> edge_multiplicities;
    std::vector<int> dyck;       // +1 marked, -1 non-marked, per step
    std::map<int, int> kappa;    // marked arrivals per vertex (root counts its
                                 // mute creation at time 0)
    bool is_even = false;
    bool is_tree_type = false;   // skeleton (multiplicities collapsed) acyclic
    int four_edge_count = 0;     // edges of total multiplicity exactly 4
    bool four_edges_disjoint = false;
    std::map<int, VertexColor> colors;
    int max_exit_degree = 0;     // largest exit cluster over vertices
};

struct MomentParams {
    long n = 0;
    Rational rho;
    // moments[l-1] = V_{2l}; V_2 must be present.
    std::vector<Rational> moments;

    // V_{2l}; ConfigError when the list is too short.
    const Rational& moment(unsigned l) const;
    void validate() const;
};

// Hook for pruning the depth-first generation.  Called for a candidate
// extension before it is taken; returning false abandons the branch.
struct PartialWalkView {
    const std::vector<int>& letters;  // walk so far (last element = current vertex)
    int candidate;                    // proposed next vertex
    int multiplicity_after;           // total multiplicity of the stepped edge after the step
    int steps_total;                  // 2s
};

struct EnumOptions {
    int max_s = kEnumDefaultMax;       // enumeration ceiling for this call
    int max_total_multiplicity = 0;    // 0 = unbounded
    bool tree_only = false;            // prune skeleton cycles as they form
    bool root_star_only = false;       // prune edges not incident to the root
    std::function<bool(const PartialWalkView&)> filter;  // optional extra prune
};

// Yields every canonical even closed loop-free walk of 2s steps exactly
// once, in lexicographic order of letter sequences.
void enumerate_walks(int s, const std::function<void(const CanonicalWalk&)>& emit,
                     const EnumOptions& options = {});

WalkClassification classify(const CanonicalWalk& walk);

// Vertex coloring of the marked second arrivals (green p / blue r / red q).
// The root's mute creation occupies its first arrival slot and its base
// couple is the couple of the walk's first step.  A vertex whose later
// marked arrivals include the first traversal of a fresh couple is a blue
// r-vertex regardless of its second-arrival color (such steps are exactly
// the skeleton-cycle creators).
std::map<int, VertexColor> color_vertices(const CanonicalWalk& walk);

struct Lemma32Report {
    int s = 0;
    long walks_checked = 0;
    long walks_with_q = 0;
    std::vector<CanonicalWalk> counterexamples;  // q-vertex present, no r-vertex
};

Lemma32Report verify_lemma_3_2(int s, const EnumOptions& options = {});

// Product over skeleton edges of V_{2m_e} / (rho^{m_e-1} n), the exact
// per-class expectation of the trajectory weight.
Rational weight_monomial(const CanonicalWalk& walk, const MomentParams& params);

// Exact E Tr H^{2s}: sum over even canonical walks of the falling
// factorial n(n-1)...(n-|V|+1) times the weight monomial.
Rational exact_moment(const MomentParams& params, int s, const EnumOptions& options = {});

struct MomentSplit {
    Rational tree_part;
    Rational non_tree_part;
};

MomentSplit decompose_moment(const MomentParams& params, int s,
                             const EnumOptions& options = {});

// Coefficient of u^p counts tree-type walks of 2s steps with all edge
// multiplicities 2 or 4, multiplicity-4 edges pairwise vertex-disjoint,
// and exactly p multiplicity-4 edges.
UPolynomial count_24star(int s, const EnumOptions& options = {});

enum class ProfileKind {
    one_edge_total_mult,          // one edge of multiplicity 2m, rest 2
    two_four_edges_sharing,       // two multiplicity-4 edges with a common vertex
    two_four_edges_any,           // two multiplicity-4 edges, any adjacency
};

struct ProfileDescriptor {
    ProfileKind kind = ProfileKind::one_edge_total_mult;
    int m = 2;  // only for one_edge_total_mult
};

// Tree-type walks matching the multiplicity profile.  For m == 1 the
// descriptor degenerates to all-multiplicity-2 walks with a distinguished
// edge, so each walk counts with multiplicity s.
Integer count_profile(int s, const ProfileDescriptor& profile,
                      const EnumOptions& options = {});

// Sum of pi(W) = prod V_{2m_e}/rho^{m_e-1} over even walks of 2m steps
// whose skeleton edges are all root-incident with total multiplicity >= 4.
Rational rose_weight_sum(int m, const MomentParams& params,
                         const EnumOptions& options = {});

}  // namespace dilute

#endif
