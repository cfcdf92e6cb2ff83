#include "dilute/report.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace dilute {

using nlohmann::json;

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::series: return "series";
        case Provenance::enumeration: return "enumeration";
        case Provenance::closed_form: return "closed-form";
        case Provenance::exact_engine: return "exact-engine";
        case Provenance::monte_carlo: return "monte-carlo";
        case Provenance::diagnostic: return "diagnostic";
    }
    return "?";
}

void write_series_csv(const TruncatedSeries& series, std::ostream& os) {
    std::size_t max_deg = 0;
    for (std::size_t s = 0; s <= series.order(); ++s)
        max_deg = std::max(max_deg, series.coeff(s).degree());
    os << "s";
    for (std::size_t p = 0; p <= max_deg; ++p) os << ",coeff_u" << p;
    os << "\n";
    for (std::size_t s = 0; s <= series.order(); ++s) {
        os << s;
        for (std::size_t p = 0; p <= max_deg; ++p)
            os << "," << fraction_string(series.coeff(s).coeff(p));
        os << "\n";
    }
}

void write_series_json(const TruncatedSeries& series, std::ostream& os) {
    json out = json::array();
    for (std::size_t s = 0; s <= series.order(); ++s) {
        json poly = json::array();
        const auto deg = series.coeff(s).degree();
        for (std::size_t p = 0; p <= deg; ++p)
            poly.push_back(fraction_string(series.coeff(s).coeff(p)));
        out.push_back({{"s", s}, {"poly", poly}});
    }
    os << out.dump(2) << "\n";
}

void write_counts_csv(const std::vector<CountRow>& rows, std::ostream& os) {
    os << "name,s,d_or_m,value\n";
    for (const auto& r : rows)
        os << r.name << "," << r.s << "," << r.d_or_m << "," << r.value << "\n";
}

void write_counts_json(const std::vector<CountRow>& rows, std::ostream& os) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"name", r.name}, {"s", r.s}, {"d_or_m", r.d_or_m}, {"value", r.value}});
    os << out.dump(2) << "\n";
}

namespace {

std::string joined_params(const ReportRow& r) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty()) out += ';';
        out += k + "=" + v;
    }
    return out;
}

}  // namespace

void write_quantity_csv(const std::vector<ReportRow>& rows, std::ostream& os) {
    os << "quantity,s,params,value,provenance\n";
    for (const auto& r : rows)
        os << r.quantity << "," << r.s << "," << joined_params(r) << "," << r.value << ","
           << provenance_name(r.provenance) << "\n";
}

void write_quantity_json(const std::vector<ReportRow>& rows, std::ostream& os) {
    json out = json::array();
    for (const auto& r : rows) {
        json params = json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        out.push_back({{"quantity", r.quantity},
                       {"s", r.s},
                       {"params", params},
                       {"value", r.value},
                       {"provenance", provenance_name(r.provenance)}});
    }
    os << out.dump(2) << "\n";
}

void write_walks(const std::vector<CanonicalWalk>& walks, int s, const std::string& filter,
                 std::ostream& os) {
    os << "# s=" << s << " filter=" << filter << "\n";
    for (const auto& w : walks) os << w.to_string() << "\n";
}

namespace {

std::string float_cell(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

void write_mc_csv(const EnsembleConfig& config, const std::vector<CompareRow>& rows,
                  std::ostream& os) {
    os << "s,mc_mean,mc_stderr,exact,series,n,rho,V4,samples,seed\n";
    for (const auto& r : rows) {
        os << r.s << "," << float_cell(r.mc_over_n * config.n) << ","
           << float_cell(r.mc_stderr_over_n * config.n) << ","
           << (r.exact_over_n ? fraction_string(*r.exact_over_n * Rational(config.n)) : "")
           << "," << fraction_string(r.series_mhat) << "," << config.n << ","
           << fraction_string(config.rho) << "," << fraction_string(config.v4()) << ","
           << config.samples << "," << config.master_seed << "\n";
    }
}

void write_mc_json(const EnsembleConfig& config, const std::vector<CompareRow>& rows,
                   std::ostream& os) {
    json out = json::array();
    for (const auto& r : rows) {
        json row = {{"s", r.s},
                    {"n", config.n},
                    {"rho", fraction_string(config.rho)},
                    {"V4", fraction_string(config.v4())},
                    {"samples", config.samples},
                    {"seed", config.master_seed},
                    {"series", fraction_string(r.series_mhat)}};
        row["mc_mean"] = std::isnan(r.mc_over_n) ? json() : json(r.mc_over_n * config.n);
        row["mc_stderr"] =
            std::isnan(r.mc_stderr_over_n) ? json() : json(r.mc_stderr_over_n * config.n);
        row["exact"] =
            r.exact_over_n ? json(fraction_string(*r.exact_over_n * Rational(config.n))) : json();
        out.push_back(row);
    }
    os << out.dump(2) << "\n";
}

}  // namespace dilute
