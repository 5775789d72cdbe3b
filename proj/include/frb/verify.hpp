#pragma once

#include <string>
#include <vector>

namespace frb {

// One acceptance check: exact computations with a pass/fail verdict, a
// representative exact value, and a coverage note.
struct CheckResult {
    int number = 0;
    std::string id;         // stable slug for reports
    std::string claim;      // one-line statement of what was checked
    bool pass = false;
    std::string exact;      // representative exact value(s)
    double value = 0;       // float view of the representative value
    std::string tolerance;  // "exact" or the numeric tolerance
    std::string detail;     // coverage and diagnostics
    double seconds = 0;
};

struct VerifyOptions {
    bool quick = false;  // reduced ranges, same identities
    int rank_filter = 0; // 0 = every rank a check calls for; else skip others
};

inline constexpr int kCheckCount = 11;

// Run one numbered check (1-based).
CheckResult run_check(int number, const VerifyOptions& opt);

// Run the whole suite in order.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt);

}  // namespace frb
