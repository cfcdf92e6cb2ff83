#include "doctest.h"

#include <cmath>

#include "dilute/errors.hpp"
#include "dilute/montecarlo.hpp"

using namespace dilute;

namespace {

EnsembleConfig small_config() {
    EnsembleConfig c;
    c.n = 60;
    c.rho = Rational(6);
    c.dist = EntryDist::rademacher;
    c.master_seed = 42;
    c.samples = 8;
    c.threads = 1;
    return c;
}

}  // namespace

TEST_CASE("config validation and entry moments") {
    EnsembleConfig c = small_config();
    CHECK_NOTHROW(c.validate());
    c.rho = Rational(100);
    CHECK_THROWS_AS(c.validate(), ConfigError);

    EnsembleConfig u = small_config();
    u.dist = EntryDist::uniform;
    CHECK(u.moment(1) == 1);
    CHECK(u.v4() == Rational(9, 5));
    CHECK(u.moment(3) == Rational(27, 7));

    EnsembleConfig t = small_config();
    t.dist = EntryDist::two_point;
    t.two_point_a = Rational(3);
    CHECK(t.moment(1) == 1);
    CHECK(t.v4() == 9);
    CHECK(t.entry_bound() == doctest::Approx(3.0));

    CHECK(parse_entry_dist("rademacher") == EntryDist::rademacher);
    CHECK(parse_entry_dist("twopoint:3") == EntryDist::two_point);
    CHECK_THROWS_AS(parse_entry_dist("cauchy"), ConfigError);
}

TEST_CASE("sampled matrices are symmetric with zero diagonal") {
    const auto c = small_config();
    const auto h = sample_matrix(c, 0);
    for (int i = 0; i < c.n; ++i) {
        CHECK(h[i * c.n + i] == 0.0);
        for (int j = 0; j < c.n; ++j) CHECK(h[i * c.n + j] == h[j * c.n + i]);
    }
}

TEST_CASE("sampling is reproducible and index-sensitive") {
    const auto c = small_config();
    CHECK(sample_matrix(c, 3) == sample_matrix(c, 3));
    CHECK(sample_matrix(c, 3) != sample_matrix(c, 4));
    EnsembleConfig c2 = c;
    c2.master_seed = 43;
    CHECK(sample_matrix(c, 3) != sample_matrix(c2, 3));
}

TEST_CASE("rho = n gives the full Wigner matrix") {
    EnsembleConfig c = small_config();
    c.n = 20;
    c.rho = Rational(20);
    const auto h = sample_matrix(c, 0);
    const double expected = 1.0 / std::sqrt(20.0);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
            if (i != j) CHECK(std::abs(h[i * c.n + j]) == doctest::Approx(expected));
}

TEST_CASE("dilution statistics across samples") {
    EnsembleConfig c = small_config();
    c.n = 100;
    c.rho = Rational(10);
    const double p = 0.1;
    long trials = 0, present = 0;
    for (long k = 0; k < 40; ++k) {
        const auto h = sample_matrix(c, k);
        for (int i = 0; i < c.n; ++i)
            for (int j = i + 1; j < c.n; ++j) {
                ++trials;
                if (h[i * c.n + j] != 0.0) ++present;
            }
    }
    const double freq = static_cast<double>(present) / trials;
    const double margin = 5.0 * std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(freq - p) <= margin);
}

TEST_CASE("trace identities") {
    // zero matrix
    const auto zero_eigs = symmetric_eigenvalues(std::vector<double>(16, 0.0), 4);
    REQUIRE(zero_eigs);
    for (double t : trace_powers(*zero_eigs, 3)) CHECK(t == 0.0);

    // single symmetric pair: eigenvalues +-c, Tr H^{2s} = 2 c^{2s}
    const double cval = 0.75;
    std::vector<double> pair_m(9, 0.0);
    pair_m[0 * 3 + 1] = cval;
    pair_m[1 * 3 + 0] = cval;
    const auto pair_eigs = symmetric_eigenvalues(pair_m, 3);
    REQUIRE(pair_eigs);
    const auto traces = trace_powers(*pair_eigs, 3);
    for (int s = 1; s <= 3; ++s)
        CHECK(traces[s - 1] == doctest::Approx(2.0 * std::pow(cval, 2 * s)).epsilon(1e-12));

    // Frobenius identity on a sampled matrix
    const auto c = small_config();
    const auto h = sample_matrix(c, 5);
    double frob = 0.0;
    for (double v : h) frob += v * v;
    const auto eigs = symmetric_eigenvalues(h, c.n);
    REQUIRE(eigs);
    CHECK(trace_powers(*eigs, 1)[0] == doctest::Approx(frob).epsilon(1e-10));
}

TEST_CASE("estimates are bit-identical across thread counts") {
    EnsembleConfig c = small_config();
    c.samples = 6;
    c.threads = 1;
    const auto serial = estimate_moments(c, 3);
    c.threads = 3;
    const auto parallel = estimate_moments(c, 3);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].mean == parallel[i].mean);
        CHECK(serial[i].stderr_ == parallel[i].stderr_);
    }
}

TEST_CASE("single sample has infinite stderr") {
    EnsembleConfig c = small_config();
    c.samples = 1;
    const auto est = estimate_moments(c, 2);
    CHECK(std::isinf(est[0].stderr_));
    CHECK(est[0].samples == 1);
}

TEST_CASE("compare_asymptotic exact column") {
    EnsembleConfig c = small_config();
    c.samples = 0;  // exact and series columns only
    const auto rows = compare_asymptotic(c, 3);
    REQUIRE(rows.size() == 3);
    CHECK(std::isnan(rows[0].mc_over_n));
    REQUIRE(rows[0].exact_over_n.has_value());
    // M_2/n = (n-1)/n
    CHECK(*rows[0].exact_over_n == Rational(c.n - 1, c.n));
    // series value at s=2 is 2 + V4/rho
    CHECK(rows[1].series_mhat == Rational(2) + c.v4() / c.rho);
    CHECK(rows[1].exact_to_series ==
          doctest::Approx(to_double(*rows[1].exact_over_n / rows[1].series_mhat)));
}

TEST_CASE("spectral bound formula and vacuity flag") {
    EnsembleConfig c = small_config();
    c.n = 1000;
    c.rho = Rational(32);
    c.samples = 0;
    const auto summary = spectral_norm_study(c, {0.5}, 0.25);
    CHECK(summary.s_used == 8);
    const double expected =
        4.0 * std::exp(4.0) * 1000.0 / (std::pow(8.0, 1.5) * std::pow(1.5, 16.0));
    CHECK(summary.rows[0].bound == doctest::Approx(expected).epsilon(1e-12));
    CHECK(summary.rows[0].vacuous == !(expected < 1.0));
    CHECK(summary.rows[0].empirical_frequency == 0.0);
    CHECK_THROWS_AS(spectral_norm_study(c, {-0.5}, 0.25), ConfigError);

    // default chi = 1/(4^11 U^2) collapses s to zero at desk-scale rho
    const auto dflt = spectral_norm_study(c, {0.5});
    CHECK(dflt.s_used == 0);
    CHECK(dflt.rows[0].vacuous);
}

TEST_CASE("lambda_max sanity on a small ensemble") {
    EnsembleConfig c;
    c.n = 300;
    c.rho = Rational(30);
    c.dist = EntryDist::rademacher;
    c.master_seed = 7;
    c.samples = 3;
    c.threads = 0;  // auto
    const auto summary = spectral_norm_study(c, {0.5});
    REQUIRE(summary.lambda_max.size() == 3);
    for (double l : summary.lambda_max) {
        CHECK(l > 1.5);
        CHECK(l < 3.5);
    }
    CHECK(summary.discarded == 0);
}
