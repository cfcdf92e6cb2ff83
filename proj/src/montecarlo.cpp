#include "dilute/montecarlo.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "dilute/errors.hpp"
#include "dilute/series.hpp"

namespace dilute {

void EnsembleConfig::validate() const {
    if (n < 2) throw ConfigError("ensemble: need n >= 2");
    if (rho <= 0 || rho > Rational(n)) throw ConfigError("ensemble: need 0 < rho <= n");
    if (samples < 0) throw ConfigError("ensemble: need samples >= 0");
    if (dist == EntryDist::two_point && two_point_a < 1)
        throw ConfigError("ensemble: two-point parameter must be >= 1");
    if (threads < 0) throw ConfigError("ensemble: threads must be >= 0");
}

Rational EnsembleConfig::moment(unsigned l) const {
    if (l == 0) return Rational(1);
    switch (dist) {
        case EntryDist::rademacher:
            return Rational(1);
        case EntryDist::uniform: {
            // E X^{2l} on [-sqrt(3), sqrt(3)] with V_2 = 1: 3^l / (2l+1)
            Rational v(int_pow(Integer(3), l), Integer(2 * l + 1));
            v.canonicalize();
            return v;
        }
        case EntryDist::two_point:
            // P(+-a) = 1/(2 a^2): V_{2l} = a^{2l-2}
            return rat_pow(two_point_a, 2 * static_cast<long>(l) - 2);
    }
    throw ConfigError("ensemble: unknown entry distribution");
}

double EnsembleConfig::entry_bound() const {
    switch (dist) {
        case EntryDist::rademacher: return 1.0;
        case EntryDist::uniform: return std::sqrt(3.0);
        case EntryDist::two_point: return to_double(two_point_a);
    }
    return 1.0;
}

std::string EnsembleConfig::dist_name() const {
    switch (dist) {
        case EntryDist::rademacher: return "rademacher";
        case EntryDist::uniform: return "uniform";
        case EntryDist::two_point: return "twopoint:" + fraction_string(two_point_a);
    }
    return "?";
}

MomentParams EnsembleConfig::moment_params(unsigned l_max) const {
    MomentParams p;
    p.n = n;
    p.rho = rho;
    for (unsigned l = 1; l <= l_max; ++l) p.moments.push_back(moment(l));
    return p;
}

EntryDist parse_entry_dist(const std::string& name) {
    if (name == "rademacher") return EntryDist::rademacher;
    if (name == "uniform") return EntryDist::uniform;
    if (name == "twopoint" || name.rfind("twopoint:", 0) == 0) return EntryDist::two_point;
    throw ConfigError("unknown entry distribution '" + name + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t master_seed, std::uint64_t sample_index) {
    // Decorrelate the per-sample streams by running the mixer over both words.
    std::uint64_t seed = master_seed;
    std::uint64_t a = splitmix64(seed);
    seed ^= sample_index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(seed);
    state_ = a ^ (b + 0x9e3779b97f4a7c15ULL);
}

std::uint64_t SampleRng::next_u64() { return splitmix64(state_); }

double SampleRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<double> sample_matrix(const EnsembleConfig& config, long sample_index) {
    config.validate();
    const int n = config.n;
    const double p = to_double(config.rho) / static_cast<double>(n);
    const double inv_sqrt_rho = 1.0 / std::sqrt(to_double(config.rho));
    const double a = to_double(config.two_point_a);
    const double two_point_p = 1.0 / (2.0 * a * a);
    const double sqrt3 = std::sqrt(3.0);
    SampleRng rng(config.master_seed, static_cast<std::uint64_t>(sample_index));
    std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool present = rng.next_unit() < p;
            if (!present) continue;
            double entry = 0.0;
            switch (config.dist) {
                case EntryDist::rademacher:
                    entry = (rng.next_u64() & 1ULL) ? 1.0 : -1.0;
                    break;
                case EntryDist::uniform:
                    entry = sqrt3 * (2.0 * rng.next_unit() - 1.0);
                    break;
                case EntryDist::two_point: {
                    const double r = rng.next_unit();
                    entry = (r < two_point_p) ? a : (r < 2.0 * two_point_p ? -a : 0.0);
                    break;
                }
            }
            const double value = entry * inv_sqrt_rho;
            h[static_cast<std::size_t>(i) * n + j] = value;
            h[static_cast<std::size_t>(j) * n + i] = value;
        }
    }
    return h;
}

std::optional<std::vector<double>> symmetric_eigenvalues(std::vector<double> matrix, int n) {
    std::vector<double> w(n);
    // Full symmetric storage: column-major view needs no transpose copy.
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                           matrix.data(), n, w.data());
    if (info != 0) return std::nullopt;
    return w;
}

std::vector<double> trace_powers(const std::vector<double>& eigenvalues, int s_max) {
    std::vector<double> traces(s_max, 0.0);
    for (const double lambda : eigenvalues) {
        const double l2 = lambda * lambda;
        double p = 1.0;
        for (int s = 0; s < s_max; ++s) {
            p *= l2;
            traces[s] += p;
        }
    }
    return traces;
}

namespace {

struct SampleResult {
    bool ok = false;
    std::vector<double> traces;
    double lambda_max = 0.0;
};

// Per-sample results land in index-addressed slots; the reduction below
// walks them in index order, so the statistics are bit-identical for any
// thread count.
std::vector<SampleResult> run_all_samples(const EnsembleConfig& config, int s_max) {
    config.validate();
    std::vector<SampleResult> slots(config.samples);
    const int threads = config.threads > 0
                            ? config.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    auto work = [&](long begin, long step) {
        for (long i = begin; i < config.samples; i += step) {
            auto h = sample_matrix(config, i);
            auto eigs = symmetric_eigenvalues(std::move(h), config.n);
            if (!eigs) continue;  // discarded, counted by the caller
            SampleResult& r = slots[i];
            r.ok = true;
            r.traces = trace_powers(*eigs, s_max);
            r.lambda_max = std::max(std::abs(eigs->front()), std::abs(eigs->back()));
        }
    };
    if (threads <= 1 || config.samples <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }
    return slots;
}

}  // namespace

SampleStats run_samples(const EnsembleConfig& config, int s_max) {
    const auto slots = run_all_samples(config, s_max);
    SampleStats stats;
    long accepted = 0;
    std::vector<double> sum(s_max, 0.0);
    for (const auto& r : slots) {
        if (!r.ok) {
            ++stats.discarded;
            continue;
        }
        ++accepted;
        stats.lambda_max.push_back(r.lambda_max);
        for (int s = 0; s < s_max; ++s) sum[s] += r.traces[s];
    }
    std::vector<double> sq(s_max, 0.0);
    for (const auto& r : slots) {
        if (!r.ok) continue;
        for (int s = 0; s < s_max; ++s) {
            const double d = r.traces[s] - sum[s] / accepted;
            sq[s] += d * d;
        }
    }
    for (int s = 0; s < s_max; ++s) {
        MomentEstimate e;
        e.s = s + 1;
        e.samples = accepted;
        e.mean = accepted ? sum[s] / accepted : std::numeric_limits<double>::quiet_NaN();
        e.stderr_ = (accepted > 1)
                        ? std::sqrt(sq[s] / (accepted - 1) / accepted)
                        : std::numeric_limits<double>::infinity();
        stats.moments.push_back(e);
    }
    return stats;
}

std::vector<MomentEstimate> estimate_moments(const EnsembleConfig& config, int s_max) {
    return run_samples(config, s_max).moments;
}

std::vector<CompareRow> compare_asymptotic(const EnsembleConfig& config, int s_max,
                                           int enum_max) {
    config.validate();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    SeriesParams sp;
    sp.order = static_cast<std::size_t>(s_max);
    sp.u_value = config.v4() / config.rho;
    const TruncatedSeries series = solve_moment_series(sp);

    std::vector<MomentEstimate> mc;
    if (config.samples > 0) mc = estimate_moments(config, s_max);

    std::vector<CompareRow> rows;
    for (int s = 1; s <= s_max; ++s) {
        CompareRow row;
        row.s = s;
        row.mc_over_n = config.samples > 0 ? mc[s - 1].mean / config.n : nan;
        row.mc_stderr_over_n = config.samples > 0 ? mc[s - 1].stderr_ / config.n : nan;
        row.series_mhat = series.coeff(s).coeff(0);
        if (s <= enum_max) {
            EnumOptions opt;
            opt.max_s = enum_max;
            row.exact_over_n =
                exact_moment(config.moment_params(static_cast<unsigned>(s)), s, opt) /
                Rational(config.n);
            row.exact_to_series = row.series_mhat == 0
                                      ? nan
                                      : to_double(*row.exact_over_n / row.series_mhat);
        } else {
            row.exact_to_series = nan;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SpectralSummary spectral_norm_study(const EnsembleConfig& config,
                                    const std::vector<double>& eps_list,
                                    std::optional<double> chi) {
    for (const double eps : eps_list)
        if (eps <= 0) throw ConfigError("spectral study: eps values must be > 0");
    const auto stats = run_samples(config, 1);
    SpectralSummary summary;
    summary.lambda_max = stats.lambda_max;
    summary.discarded = stats.discarded;
    const double u = config.entry_bound();
    summary.chi = chi ? *chi : 1.0 / (std::pow(4.0, 11) * u * u);
    summary.s_used = static_cast<int>(summary.chi * to_double(config.rho));
    if (!summary.lambda_max.empty()) {
        auto sorted = summary.lambda_max;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t k = sorted.size();
        summary.median_lambda_max =
            (k % 2) ? sorted[k / 2] : 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);
    }
    const double v4 = to_double(config.v4());
    for (const double eps : eps_list) {
        SpectralBoundRow row;
        row.eps = eps;
        long exceed = 0;
        for (const double l : summary.lambda_max)
            if (l >= 2.0 * (1.0 + eps)) ++exceed;
        row.empirical_frequency =
            summary.lambda_max.empty() ? 0.0
                                       : static_cast<double>(exceed) / summary.lambda_max.size();
        const int s = summary.s_used;
        if (s >= 1) {
            row.bound = 4.0 * std::exp(16.0 * v4 * summary.chi) * config.n /
                        (std::pow(s, 1.5) * std::pow(1.0 + eps, 2.0 * s));
        } else {
            row.bound = std::numeric_limits<double>::infinity();  // s = 0: no decay
        }
        row.vacuous = !(row.bound < 1.0);
        summary.rows.push_back(row);
    }
    return summary;
}

}  // namespace dilute
