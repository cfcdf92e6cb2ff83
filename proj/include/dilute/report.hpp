#ifndef DILUTE_REPORT_HPP
#define DILUTE_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dilute/montecarlo.hpp"
#include "dilute/series.hpp"
#include "dilute/walks.hpp"

namespace dilute {

enum class Provenance { series, enumeration, closed_form, exact_engine, monte_carlo, diagnostic };

std::string provenance_name(Provenance p);

// Generic row for count/moment tables: quantity, index parameters, exact
// value string, provenance tag.
struct ReportRow {
    std::string quantity;
    long s = 0;
    std::vector<std::pair<std::string, std::string>> params;
    std::string value;
    Provenance provenance = Provenance::closed_form;
};

// Series tables: header `s,coeff_u0,...`, exact integers as decimal strings.
void write_series_csv(const TruncatedSeries& series, std::ostream& os);
// JSON list of {"s": int, "poly": ["num/den", ...]}.
void write_series_json(const TruncatedSeries& series, std::ostream& os);

// Combinatorics tables: header `name,s,d_or_m,value`.
struct CountRow {
    std::string name;
    long s = 0;
    long d_or_m = 0;
    std::string value;
};
void write_counts_csv(const std::vector<CountRow>& rows, std::ostream& os);
void write_counts_json(const std::vector<CountRow>& rows, std::ostream& os);

// Walk-engine results: header `quantity,s,params,value`; params is a
// semicolon-joined key=value list, rationals as num/den.
void write_quantity_csv(const std::vector<ReportRow>& rows, std::ostream& os);
void write_quantity_json(const std::vector<ReportRow>& rows, std::ostream& os);

// Walk dump: `# s=<s> filter=<name>` header, one comma-separated walk per line.
void write_walks(const std::vector<CanonicalWalk>& walks, int s, const std::string& filter,
                 std::ostream& os);

// Monte Carlo table: header `s,mc_mean,mc_stderr,exact,series,n,rho,V4,samples,seed`.
void write_mc_csv(const EnsembleConfig& config, const std::vector<CompareRow>& rows,
                  std::ostream& os);
void write_mc_json(const EnsembleConfig& config, const std::vector<CompareRow>& rows,
                   std::ostream& os);

}  // namespace dilute

#endif
