#ifndef DILUTE_MONTECARLO_HPP
#define DILUTE_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilute/numeric.hpp"
#include "dilute/walks.hpp"

namespace dilute {

// Symmetric bounded entry laws, all normalized to V_2 = 1 exactly.
enum class EntryDist {
    rademacher,   // +-1, V_4 = 1
    uniform,      // uniform on [-sqrt(3), sqrt(3)], V_4 = 9/5
    two_point,    // +-a with probability 1/(2a^2) each, 0 otherwise; V_4 = a^2
};

struct EnsembleConfig {
    int n = 0;
    Rational rho;
    EntryDist dist = EntryDist::rademacher;
    Rational two_point_a = Rational(2);  // magnitude parameter a >= 1
    std::uint64_t master_seed = 1;
    long samples = 0;
    int threads = 0;  // 0 = hardware concurrency

    void validate() const;
    // V_{2l} of the entry law, exact.
    Rational moment(unsigned l) const;
    Rational v4() const { return moment(2); }
    // Almost-sure bound U on |a_ij|.
    double entry_bound() const;
    std::string dist_name() const;
    // Moment-engine parameters with the same n, rho, V_{2l}; single source
    // of truth for cross-engine comparisons.
    MomentParams moment_params(unsigned l_max) const;
};

EntryDist parse_entry_dist(const std::string& name);

// Counter-based per-sample stream; identical (seed, index) pairs yield
// identical matrices regardless of threading or sample order.
class SampleRng {
public:
    SampleRng(std::uint64_t master_seed, std::uint64_t sample_index);
    std::uint64_t next_u64();
    double next_unit();  // [0, 1), 53-bit
private:
    std::uint64_t state_;
};

// Dense n*n symmetric matrix, row-major, zero diagonal.
std::vector<double> sample_matrix(const EnsembleConfig& config, long sample_index);

// Ascending eigenvalues via LAPACK dsyevd; nullopt if the solver fails.
std::optional<std::vector<double>> symmetric_eigenvalues(std::vector<double> matrix, int n);

// Tr H^{2s} for s = 1..s_max from the spectrum.
std::vector<double> trace_powers(const std::vector<double>& eigenvalues, int s_max);

struct MomentEstimate {
    int s = 0;
    double mean = 0.0;
    double stderr_ = 0.0;  // +inf when samples == 1
    long samples = 0;
};

struct SampleStats {
    std::vector<MomentEstimate> moments;   // s = 1..s_max
    std::vector<double> lambda_max;        // per accepted sample
    long discarded = 0;                    // eigensolver failures
};

SampleStats run_samples(const EnsembleConfig& config, int s_max);

std::vector<MomentEstimate> estimate_moments(const EnsembleConfig& config, int s_max);

struct CompareRow {
    int s = 0;
    double mc_over_n = 0.0;          // NaN when samples == 0
    double mc_stderr_over_n = 0.0;
    std::optional<Rational> exact_over_n;  // exact engine, when s within reach
    Rational series_mhat;            // mhat_s at u = V4/rho
    double exact_to_series = 0.0;    // NaN when either side missing
};

// Diagnostic table MC / exact / series; no pass-fail.
std::vector<CompareRow> compare_asymptotic(const EnsembleConfig& config, int s_max,
                                           int enum_max = kEnumDefaultMax);

struct SpectralBoundRow {
    double eps = 0.0;
    double empirical_frequency = 0.0;  // fraction of samples with lambda_max >= 2(1+eps)
    double bound = 0.0;                // right side of the deviation inequality
    bool vacuous = false;              // bound >= 1
};

struct SpectralSummary {
    std::vector<double> lambda_max;    // per accepted sample
    double median_lambda_max = 0.0;
    double chi = 0.0;
    int s_used = 0;                    // floor(chi * rho)
    std::vector<SpectralBoundRow> rows;
    long discarded = 0;
};

// Empirical spectral norm distribution plus the Chebyshev-type tail bound
// 4 e^{16 V4 chi} n / (s^{3/2} (1+eps)^{2s}) with s = floor(chi rho).
// chi defaults to 1/(4^11 U^2).
SpectralSummary spectral_norm_study(const EnsembleConfig& config,
                                    const std::vector<double>& eps_list,
                                    std::optional<double> chi = std::nullopt);

}  // namespace dilute

#endif
