#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcluster/io.hpp"

namespace qcluster {

// Outcome of a named verification suite: counts of passed and failed checks, failure witnesses and timing.
struct SuiteResult {
    std::string name;
    std::string description;
    int pass = 0;
    int fail = 0;
    int skipped = 0;  // instances abandoned on the term budget
    std::vector<std::string> details;
    double seconds = 0;

    bool ok() const { return fail == 0 && pass > 0; }
    json to_json() const;
};

std::vector<std::string> suite_names();
// Throws InputError for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint32_t rng_seed = 1);

}  // namespace qcluster
