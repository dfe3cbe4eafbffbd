// One line per acceptance criterion; exit status 0 iff every line passes.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "qcluster/verify.hpp"

using namespace qcluster;

struct Criterion {
    std::string id;
    std::string suite;
    int min_checks;      // the suite must report at least this many passing checks
    double time_limit;   // seconds, 0 = none
};

int main() {
    const std::vector<Criterion> criteria{
        {"A1", "kronecker-degrees", 21, 10},
        {"A2", "y-degree", 3, 0},
        {"A3", "freeze-example", 64, 0},
        {"A4", "oracle-pair", 200, 30},
        {"A5", "tsystems", 20, 120},
        {"A6", "properties", 500, 0},
        {"A7", "commutation", 200, 0},
        {"A8", "kl", 160, 120},
        {"A9", "sl2", 300, 0},
        {"A10", "correction", 100, 0},
    };
    int failed = 0;
    for (auto& c : criteria) {
        SuiteResult r;
        r.name = c.suite;
        try {
            r = run_suite(c.suite);
        } catch (const std::exception& e) {
            ++r.fail;
            r.details.push_back(std::string("aborted: ") + e.what());
        }
        bool ok = r.fail == 0 && r.pass >= c.min_checks && (c.time_limit == 0 || r.seconds < c.time_limit);
        std::printf("%-4s %s  %-18s pass=%d fail=%d skipped=%d need>=%d time=%.2fs%s\n", c.id.c_str(),
                    ok ? "PASS" : "FAIL", c.suite.c_str(), r.pass, r.fail, r.skipped, c.min_checks, r.seconds,
                    c.time_limit > 0 ? (" limit=" + std::to_string(static_cast<int>(c.time_limit)) + "s").c_str() : "");
        for (std::size_t i = 0; !ok && i < r.details.size() && i < 5; ++i) std::printf("       %s\n", r.details[i].c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
