#ifndef DILUTE_SELFCHECK_HPP
#define DILUTE_SELFCHECK_HPP

#include <string>
#include <vector>

namespace dilute {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool hard = true;   // diagnostic rows never affect the exit code
    std::string detail;
};

// Identity suite over series, enumeration and closed forms.  quick keeps
// every exact identity at s <= 5 scale; full raises enumeration to
// enum_max and the closed-form ranges to 200 and adds the coloring sweep
// and the exit-degree audit.
std::vector<CheckResult> run_selfcheck(bool full, int enum_max = 7);

// 0 iff every hard check passed.
int selfcheck_exit_code(const std::vector<CheckResult>& results);

}  // namespace dilute

#endif
