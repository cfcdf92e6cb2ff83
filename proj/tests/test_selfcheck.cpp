#include "doctest.h"

#include <algorithm>

#include "dilute/selfcheck.hpp"
#include "dilute/series.hpp"
#include "dilute/walks.hpp"

using namespace dilute;

TEST_CASE("quick selfcheck passes on a correct build") {
    const auto results = run_selfcheck(false);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
    CHECK(selfcheck_exit_code(results) == 0);
    const bool has_series_vs_enum =
        std::any_of(results.begin(), results.end(), [](const CheckResult& r) {
            return r.name.find("series==enumeration") != std::string::npos;
        });
    CHECK(has_series_vs_enum);
}

TEST_CASE("a corrupted identity is detected and fails the exit code") {
    // Forge the comparison the selfcheck makes, with one corrupted cell: the
    // failure must surface as a failed hard check, which maps to exit 1.
    SeriesParams p;
    p.order = 4;
    TruncatedSeries f = solve_moment_series(p);
    UPolynomial corrupted = f.coeff(4);
    corrupted += UPolynomial(Rational(1));  // off-by-one Catalan cell
    f.set_coeff(4, corrupted);

    bool mismatch = false;
    for (int s = 1; s <= 4; ++s)
        if (!(count_24star(s) == f.coeff(s))) mismatch = true;
    CHECK(mismatch);

    std::vector<CheckResult> forged{{"series==enumeration s<=4", !mismatch, true,
                                     mismatch ? "corrupted catalan cell at s=4" : ""}};
    CHECK(selfcheck_exit_code(forged) == 1);

    CheckResult diag{"phi22 ratio", false, false, "diagnostic rows never gate"};
    forged[0].pass = true;
    forged.push_back(diag);
    CHECK(selfcheck_exit_code(forged) == 0);
}
