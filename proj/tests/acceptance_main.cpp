// Runs every acceptance check at full range and reports one verdict line
// per check. Exits nonzero if any check fails.
#include <cstdio>
#include <string>

#include "frb/verify.hpp"

int main(int argc, char** argv) {
    frb::VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--quick") opt.quick = true;
        else if (arg == "--rank" && i + 1 < argc) opt.rank_filter = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--quick] [--rank R]\n", argv[0]);
            return 2;
        }
    }

    int failed = 0;
    double total = 0;
    for (const frb::CheckResult& c : frb::run_all_checks(opt)) {
        std::printf("[%s] check %2d %-28s %7.2fs  %s\n", c.pass ? "PASS" : "FAIL", c.number,
                    c.id.c_str(), c.seconds, c.claim.c_str());
        if (!c.exact.empty())
            std::printf("           value %s  (%.9g, tolerance %s)\n", c.exact.c_str(), c.value,
                        c.tolerance.c_str());
        std::printf("           %s\n", c.detail.c_str());
        if (!c.pass) ++failed;
        total += c.seconds;
    }
    std::printf("%d of %d checks passed in %.1fs\n", frb::kCheckCount - failed, frb::kCheckCount,
                total);
    return failed == 0 ? 0 : 1;
}
