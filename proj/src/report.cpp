#include "paramod/report.hpp"

#include <cstdio>
#include <sstream>

namespace paramod {

namespace {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    return out;
}

} // namespace

std::string emit_report(const VerificationReport& r, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::json) {
        os << "{\"suite\":\"" << json_escape(r.suite) << "\",";
        os << "\"tolerances\":{";
        for (size_t i = 0; i < r.tolerances.size(); ++i) {
            if (i) os << ",";
            os << "\"" << json_escape(r.tolerances[i].first) << "\":" << num17(r.tolerances[i].second);
        }
        os << "},\"cases\":[";
        for (size_t i = 0; i < r.cases.size(); ++i) {
            const auto& c = r.cases[i];
            if (i) os << ",";
            os << "{\"name\":\"" << json_escape(c.name) << "\",\"params\":\"" << json_escape(c.params)
               << "\"";
            if (c.lhs)
                os << ",\"lhs_re\":" << num17(c.lhs->real()) << ",\"lhs_im\":" << num17(c.lhs->imag());
            if (c.rhs)
                os << ",\"rhs_re\":" << num17(c.rhs->real()) << ",\"rhs_im\":" << num17(c.rhs->imag());
            os << ",\"abs_err\":" << num17(c.abs_err) << ",\"rel_err\":" << num17(c.rel_err)
               << ",\"tail_bound\":" << num17(c.tail_bound) << ",\"tolerance\":" << num17(c.tolerance)
               << ",\"exact\":" << (c.exact ? "true" : "false") << ",\"pass\":" << (c.pass ? "true" : "false")
               << "}";
        }
        os << "],\"notes\":[";
        for (size_t i = 0; i < r.notes.size(); ++i) {
            if (i) os << ",";
            os << "{\"key\":\"" << json_escape(r.notes[i].first) << "\",\"value\":\""
               << json_escape(r.notes[i].second) << "\"}";
        }
        os << "],\"summary\":{\"total\":" << r.total() << ",\"passed\":" << r.passed()
           << ",\"failed\":" << r.failed() << "}}";
        os << "\n";
    } else if (format == ReportFormat::csv) {
        os << "suite,name,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tail_bound,tolerance,exact,"
              "pass\n";
        for (const auto& c : r.cases) {
            os << r.suite << "," << c.name << ",\"" << c.params << "\",";
            if (c.lhs)
                os << num17(c.lhs->real()) << "," << num17(c.lhs->imag()) << ",";
            else
                os << ",,";
            if (c.rhs)
                os << num17(c.rhs->real()) << "," << num17(c.rhs->imag()) << ",";
            else
                os << ",,";
            os << num17(c.abs_err) << "," << num17(c.rel_err) << "," << num17(c.tail_bound) << ","
               << num17(c.tolerance) << "," << (c.exact ? 1 : 0) << "," << (c.pass ? 1 : 0) << "\n";
        }
    } else {
        os << "suite " << r.suite << "\n";
        for (auto& [k, v] : r.tolerances) os << "  tolerance " << k << " = " << num17(v) << "\n";
        for (const auto& c : r.cases) {
            os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name;
            if (!c.params.empty()) os << " (" << c.params << ")";
            if (c.lhs) os << " lhs=" << num17(c.lhs->real()) << (c.lhs->imag() ? "+i*" + num17(c.lhs->imag()) : "");
            if (c.rhs) os << " rhs=" << num17(c.rhs->real()) << (c.rhs->imag() ? "+i*" + num17(c.rhs->imag()) : "");
            os << " rel_err=" << num17(c.rel_err) << " tol=" << num17(c.tolerance) << "\n";
        }
        for (auto& [k, v] : r.notes) os << "  note " << k << ": " << v << "\n";
        os << "  summary: " << r.passed() << "/" << r.total() << " passed, wall " << num17(r.wall_time_seconds)
           << " s\n";
    }
    return os.str();
}

int report_exit_code(const VerificationReport& r) { return r.all_pass() ? 0 : 1; }

} // namespace paramod
