#pragma once

#include <string>
#include <vector>

#include "paramod/report.hpp"

namespace paramod {

/// Grid sizes and tolerances of the verification suites. Defaults are the
/// acceptance settings; `quick` shrinks the grids for fast smoke runs.
struct SuiteConfig {
    long long achisum_max_modulus = 24;
    long long gauss_max_modulus = 50;
    unsigned long long seed = 20260808ULL;
    int group_words = 1000;
    int char_pairs = 200;
    int epstein_forms = 10;
    bool quick = false;
};

/// Suites: group, chars, achisum, epstein, eisenstein, fe, smartsum, diff,
/// series, all.
std::vector<std::string> suite_names();

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace paramod
