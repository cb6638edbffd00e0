#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace paramod {

struct CaseResult {
    std::string name;
    std::string params;
    std::optional<std::complex<double>> lhs, rhs;
    double abs_err = 0;
    double rel_err = 0; // abs_err / (1 + |lhs|)
    double tail_bound = 0;
    double tolerance = 0;
    bool exact = false; // boolean/integer check: pass recorded directly
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;
    std::vector<std::pair<std::string, double>> tolerances; // per-suite defaults, printed for audit
    std::vector<std::pair<std::string, std::string>> notes; // reported-not-asserted observations
    double wall_time_seconds = 0;

    int total() const { return static_cast<int>(cases.size()); }
    int passed() const {
        int n = 0;
        for (auto& c : cases) n += c.pass ? 1 : 0;
        return n;
    }
    int failed() const { return total() - passed(); }
    bool all_pass() const { return failed() == 0; }
};

enum class ReportFormat { json, csv, text };

/// Serialize with stable field order; numbers at 17 significant digits.
/// JSON omits wall time so identical configs give byte-identical output;
/// the text format carries it.
std::string emit_report(const VerificationReport& r, ReportFormat format);

/// 0 all pass, 1 any fail (usage errors are exit code 2 at the CLI level).
int report_exit_code(const VerificationReport& r);

} // namespace paramod
