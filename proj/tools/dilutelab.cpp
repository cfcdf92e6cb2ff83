// Command-line front end for the dilute-moment engines: exact series,
// closed-form counts, walk enumeration, exact finite-n moments, Monte
// Carlo sampling, cross-engine comparison, bound certification, and the
// identity selfcheck.
//
// Exit codes: 0 success, 1 identity/assertion failure, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "dilute/combinatorics.hpp"
#include "dilute/errors.hpp"
#include "dilute/montecarlo.hpp"
#include "dilute/report.hpp"
#include "dilute/selfcheck.hpp"
#include "dilute/series.hpp"
#include "dilute/walks.hpp"

namespace {

using namespace dilute;

struct CommonOpts {
    std::string output;
    std::string format = "csv";
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--output", opts.output, "Output file (default: stdout)");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", opts.threads, "Worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);
}

// Writes through to the requested sink; stdout when no path is given.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

int run_series(const CommonOpts& common, std::size_t order, const std::string& kind,
               const std::string& u_text) {
    TruncatedSeries series(0);
    if (kind == "moment") {
        SeriesParams p;
        p.order = order;
        if (!u_text.empty()) p.u_value = parse_rational(u_text);
        series = solve_moment_series(p);
    } else if (kind == "catalan") {
        series = solve_catalan(order);
    } else if (kind == "phi12") {
        series = phi_12(order);
    } else {
        series = phi_22(order);
    }
    Sink sink(common.output);
    if (common.format == "csv")
        write_series_csv(series, sink.stream());
    else
        write_series_json(series, sink.stream());
    return 0;
}

int run_counts(const CommonOpts& common, unsigned s_max, bool check_only) {
    if (check_only) {
        // identity suite; nonzero exit on any failure
        RootDegreeTable table(s_max);
        (void)table;
        de_verify_range(s_max);
        for (unsigned s = 2; s <= s_max; ++s) {
            n_12_closed(s);
            r_sequence(s);
        }
        for (unsigned p = 1; p <= 10; ++p) catalan_convolution(std::min(s_max, 100u), p);
        std::cerr << "counts --check: all identities hold through s=" << s_max << "\n";
        return 0;
    }
    std::vector<CountRow> rows;
    const RootDegreeTable table(s_max);
    for (unsigned s = 0; s <= s_max; ++s)
        rows.push_back({"catalan", s, 0, catalan(s).get_str()});
    for (unsigned s = 1; s <= s_max; ++s)
        for (unsigned d = 1; d <= s; ++d)
            rows.push_back({"root_degree", s, static_cast<long>(d), table.at(s, d).get_str()});
    for (unsigned s = 2; s <= s_max; ++s) {
        rows.push_back({"n_1m", s, 2, n_12_closed(s).get_str()});
        rows.push_back({"r_sequence", s, 0, r_sequence(s).get_str()});
    }
    for (unsigned s = 4; s <= s_max; ++s)
        rows.push_back({"n_hat_22", s, 0, n_hat_22(s).get_str()});
    for (unsigned k = 1; k <= s_max; ++k)
        for (unsigned m = 1; m <= k; ++m) {
            const auto [d, e] = de_recurrence(k, m);
            rows.push_back({"d_km", k, static_cast<long>(m), d.get_str()});
            rows.push_back({"e_km", k, static_cast<long>(m), e.get_str()});
        }
    Sink sink(common.output);
    if (common.format == "csv")
        write_counts_csv(rows, sink.stream());
    else
        write_counts_json(rows, sink.stream());
    return 0;
}

int run_enumerate(const CommonOpts& common, int s, const std::string& filter, int max_s) {
    EnumOptions opt;
    opt.max_s = max_s;
    if (s > kEnumDefaultMax)
        std::cerr << "warning: enumerating beyond the default ceiling s="
                  << kEnumDefaultMax << "; expect exponential growth\n";
    std::vector<CanonicalWalk> walks;
    auto take = [&](const CanonicalWalk& w) { walks.push_back(w); };
    if (filter == "all") {
        enumerate_walks(s, take, opt);
    } else if (filter == "tree") {
        opt.tree_only = true;
        enumerate_walks(s, take, opt);
    } else if (filter == "mult2") {
        opt.tree_only = true;
        opt.max_total_multiplicity = 2;
        enumerate_walks(s, take, opt);
    } else if (filter == "star24") {
        opt.tree_only = true;
        opt.max_total_multiplicity = 4;
        enumerate_walks(s, [&](const CanonicalWalk& w) {
            const auto c = classify(w);
            for (const auto& [e, m] : c.edge_multiplicities)
                if (m != 2 && m != 4) return;
            if (!c.four_edges_disjoint) return;
            walks.push_back(w);
        }, opt);
    } else {
        throw ConfigError("unknown filter '" + filter + "'");
    }
    Sink sink(common.output);
    write_walks(walks, s, filter, sink.stream());
    return 0;
}

int run_exact(const CommonOpts& common, long n, const std::string& rho_text, int s,
              const std::string& moments_text, bool decompose, int max_s) {
    MomentParams params;
    params.n = n;
    params.rho = parse_rational(rho_text);
    params.moments = parse_rational_list(moments_text);
    params.validate();
    EnumOptions opt;
    opt.max_s = max_s;
    std::vector<ReportRow> rows;
    auto param_list = [&]() {
        return std::vector<std::pair<std::string, std::string>>{
            {"n", std::to_string(n)}, {"rho", fraction_string(params.rho)}};
    };
    if (decompose) {
        const auto split = decompose_moment(params, s, opt);
        rows.push_back({"tree_part", s, param_list(), fraction_string(split.tree_part),
                        Provenance::exact_engine});
        rows.push_back({"non_tree_part", s, param_list(), fraction_string(split.non_tree_part),
                        Provenance::exact_engine});
        rows.push_back({"exact_moment", s, param_list(),
                        fraction_string(split.tree_part + split.non_tree_part),
                        Provenance::exact_engine});
    } else {
        rows.push_back({"exact_moment", s, param_list(),
                        fraction_string(exact_moment(params, s, opt)),
                        Provenance::exact_engine});
    }
    Sink sink(common.output);
    if (common.format == "csv")
        write_quantity_csv(rows, sink.stream());
    else
        write_quantity_json(rows, sink.stream());
    return 0;
}

EnsembleConfig make_config(long n, const std::string& rho_text, const std::string& dist,
                           long samples, std::uint64_t seed, int threads) {
    EnsembleConfig config;
    config.n = static_cast<int>(n);
    config.rho = parse_rational(rho_text);
    config.dist = parse_entry_dist(dist);
    const auto colon = dist.find(':');
    if (colon != std::string::npos) config.two_point_a = parse_rational(dist.substr(colon + 1));
    config.samples = samples;
    config.master_seed = seed;
    config.threads = threads;
    config.validate();
    return config;
}

int run_mc(const CommonOpts& common, const EnsembleConfig& config, int s_max,
           const std::string& lambda_out, int enum_max) {
    const auto rows = compare_asymptotic(config, s_max, enum_max);
    Sink sink(common.output);
    if (common.format == "csv")
        write_mc_csv(config, rows, sink.stream());
    else
        write_mc_json(config, rows, sink.stream());
    if (!lambda_out.empty()) {
        const auto stats = run_samples(config, 1);
        std::ofstream lf(lambda_out);
        if (!lf) throw ConfigError("cannot open '" + lambda_out + "'");
        for (double l : stats.lambda_max) lf << l << "\n";
    }
    return 0;
}

int run_bounds(const CommonOpts& common, std::size_t order, const std::string& grid_text,
               unsigned exit_degree_smax) {
    const auto grid = parse_rational_list(grid_text);
    std::vector<ReportRow> rows;
    const auto upper = check_upper_bound(order, grid);
    for (const auto& cell : upper.cells) {
        ReportRow row;
        row.quantity = "upper_bound";
        row.s = static_cast<long>(cell.s);
        row.params = {{"u", fraction_string(cell.u)},
                      {"ratio", fraction_string(cell.ratio)}};
        row.value = cell.pass ? "pass" : "fail";
        row.provenance = Provenance::series;
        rows.push_back(std::move(row));
    }
    const auto lower = check_lower_bound(order);
    for (const auto& r : lower.rows) {
        ReportRow row;
        row.quantity = "lower_bound";
        row.s = static_cast<long>(r.s);
        row.params = {{"u1_equals_n12", r.u1_equals_n12 ? "yes" : "no"}};
        row.value = (r.u0_is_catalan && r.u1_at_least_n12) ? "pass" : "fail";
        row.provenance = Provenance::series;
        rows.push_back(std::move(row));
    }
    const auto audit = check_exit_degree_bound(exit_degree_smax);
    for (const auto& [s, d] : audit.failures) {
        ReportRow row;
        row.quantity = "exit_degree_violation";
        row.s = static_cast<long>(s);
        row.params = {{"d", std::to_string(d)}};
        row.value = "fail";
        row.provenance = Provenance::diagnostic;
        rows.push_back(std::move(row));
    }
    Sink sink(common.output);
    if (common.format == "csv")
        write_quantity_csv(rows, sink.stream());
    else
        write_quantity_json(rows, sink.stream());
    return (upper.all_pass && lower.all_pass) ? 0 : 1;
}

int run_selfcheck_cmd(const std::string& depth, int enum_max) {
    const auto results = run_selfcheck(depth == "full", enum_max);
    for (const auto& r : results) {
        const char* tag = r.hard ? (r.pass ? "PASS" : "FAIL")
                                 : (r.pass ? "DIAG" : "DIAG");
        std::cout << tag << "  " << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        if (r.hard && !r.pass) {
            std::cout << "first failing identity: " << r.name << "\n";
            return 1;
        }
    }
    return selfcheck_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laboratory for moments of strongly diluted Wigner random matrices"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value config file with [section] headers");
    app.allow_config_extras(CLI::config_extras_mode::error);

    // series
    auto* series_cmd = app.add_subcommand("series", "Exact moment-coefficient series");
    CommonOpts series_common;
    add_common(series_cmd, series_common);
    std::size_t series_order = 8;
    std::string series_kind = "moment", series_u;
    series_cmd->add_option("--order", series_order, "Truncation order (max power of z)")
        ->check(CLI::Range(std::size_t{0}, std::size_t{256}));
    series_cmd->add_option("--kind", series_kind, "Which series to emit")
        ->check(CLI::IsMember({"moment", "catalan", "phi12", "phi22"}));
    series_cmd->add_option("--u", series_u, "Specialize u = V4/rho to an exact rational");

    // counts
    auto* counts_cmd = app.add_subcommand("counts", "Closed-form counting sequences");
    CommonOpts counts_common;
    add_common(counts_cmd, counts_common);
    unsigned counts_smax = 16;
    bool counts_check = false;
    counts_cmd->add_option("--smax", counts_smax, "Largest index")->check(CLI::PositiveNumber);
    counts_cmd->add_flag("--check", counts_check, "Run the identity suite, exit 1 on failure");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "Dump canonical even walks");
    CommonOpts enum_common;
    add_common(enum_cmd, enum_common);
    int enum_s = 3, enum_limit = kEnumDefaultMax;
    std::string enum_filter = "all";
    enum_cmd->add_option("--s", enum_s, "Half-length (walks of 2s steps)")->required();
    enum_cmd->add_option("--filter", enum_filter, "all | tree | mult2 | star24");
    enum_cmd->add_option("--max-s", enum_limit, "Raise the enumeration ceiling");

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "Exact finite-n ensemble moments");
    CommonOpts exact_common;
    add_common(exact_cmd, exact_common);
    long exact_n = 100;
    int exact_s = 2, exact_limit = kEnumDefaultMax;
    std::string exact_rho = "10", exact_moments = "1,1,1,1,1,1,1";
    bool exact_decompose = false;
    exact_cmd->add_option("--n", exact_n, "Matrix dimension")->required();
    exact_cmd->add_option("--rho", exact_rho, "Dilution parameter (exact rational)")->required();
    exact_cmd->add_option("--s", exact_s, "Half moment order (computes E Tr H^{2s})")->required();
    exact_cmd->add_option("--moments", exact_moments, "V_2,V_4,... as exact rationals");
    exact_cmd->add_flag("--decompose", exact_decompose, "Split into tree / non-tree parts");
    exact_cmd->add_option("--max-s", exact_limit, "Raise the enumeration ceiling");

    // mc & compare share ensemble flags
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo moment estimation");
    auto* compare_cmd = app.add_subcommand("compare", "MC / exact / series comparison table");
    CommonOpts mc_common, compare_common;
    struct McFlags {
        long n = 300;
        std::string rho = "10";
        std::string dist = "rademacher";
        long samples = 1000;
        std::uint64_t seed = 1;
        int s_max = 3;
        int enum_max = kEnumDefaultMax;
        std::string lambda_out;
    } mc_flags, cmp_flags;
    for (auto [cmd, common, flags] :
         {std::tuple{mc_cmd, &mc_common, &mc_flags}, std::tuple{compare_cmd, &compare_common, &cmp_flags}}) {
        add_common(cmd, *common);
        cmd->add_option("--n", flags->n, "Matrix dimension")->required();
        cmd->add_option("--rho", flags->rho, "Dilution parameter")->required();
        cmd->add_option("--dist", flags->dist, "rademacher | uniform | twopoint:a");
        cmd->add_option("--samples", flags->samples, "Sample count (0 = exact/series only)");
        cmd->add_option("--seed", flags->seed, "Master seed");
        cmd->add_option("--smax", flags->s_max, "Largest half moment order");
        cmd->add_option("--max-s", flags->enum_max, "Exact-engine enumeration ceiling");
    }
    mc_cmd->add_option("--lambda-out", mc_flags.lambda_out,
                       "Dump per-sample spectral norms, one float per line");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Certified bound checks");
    CommonOpts bounds_common;
    add_common(bounds_cmd, bounds_common);
    std::size_t bounds_order = 32;
    std::string bounds_grid = "1/100,1/10,1/2,1";
    unsigned bounds_exit_smax = 64;
    bounds_cmd->add_option("--order", bounds_order, "Series order for the bound sweep");
    bounds_cmd->add_option("--grid", bounds_grid, "Comma-separated u values");
    bounds_cmd->add_option("--exit-degree-smax", bounds_exit_smax,
                           "Range for the exit-degree audit");

    // selfcheck
    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the identity suite");
    std::string selfcheck_depth = "quick";
    int selfcheck_enum_max = kEnumDefaultMax;
    selfcheck_cmd->add_option("--depth", selfcheck_depth, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    selfcheck_cmd->add_option("--max-s", selfcheck_enum_max, "Enumeration ceiling");

    try {
        app.parse(argc, argv);
        // Echo the resolved configuration so runs are auditable.
        std::cerr << "resolved config:\n" << app.config_to_str(true, false);
        if (series_cmd->parsed())
            return run_series(series_common, series_order, series_kind, series_u);
        if (counts_cmd->parsed()) return run_counts(counts_common, counts_smax, counts_check);
        if (enum_cmd->parsed())
            return run_enumerate(enum_common, enum_s, enum_filter, enum_limit);
        if (exact_cmd->parsed())
            return run_exact(exact_common, exact_n, exact_rho, exact_s, exact_moments,
                             exact_decompose, exact_limit);
        if (mc_cmd->parsed()) {
            const auto config = make_config(mc_flags.n, mc_flags.rho, mc_flags.dist,
                                            mc_flags.samples, mc_flags.seed, mc_common.threads);
            return run_mc(mc_common, config, mc_flags.s_max, mc_flags.lambda_out,
                          mc_flags.enum_max);
        }
        if (compare_cmd->parsed()) {
            const auto config = make_config(cmp_flags.n, cmp_flags.rho, cmp_flags.dist,
                                            cmp_flags.samples, cmp_flags.seed,
                                            compare_common.threads);
            return run_mc(compare_common, config, cmp_flags.s_max, "", cmp_flags.enum_max);
        }
        if (bounds_cmd->parsed())
            return run_bounds(bounds_common, bounds_order, bounds_grid, bounds_exit_smax);
        if (selfcheck_cmd->parsed())
            return run_selfcheck_cmd(selfcheck_depth, selfcheck_enum_max);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InconsistencyError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
