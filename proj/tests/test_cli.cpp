#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "paramod/report.hpp"
#include "paramod/suites.hpp"

using namespace paramod;

TEST_CASE("empty report serializes to valid json with zero summary") {
    VerificationReport r;
    r.suite = "empty";
    std::string js = emit_report(r, ReportFormat::json);
    auto parsed = nlohmann::json::parse(js);
    CHECK(parsed["summary"]["total"] == 0);
    CHECK(parsed["summary"]["passed"] == 0);
    CHECK(parsed["summary"]["failed"] == 0);
    CHECK(report_exit_code(r) == 0);
}

TEST_CASE("failing case flips the exit code and the pass flag") {
    VerificationReport r;
    r.suite = "x";
    CaseResult c;
    c.name = "bad";
    c.rel_err = 1.0;
    c.tolerance = 1e-6;
    c.pass = false;
    r.cases.push_back(c);
    CHECK(report_exit_code(r) == 1);
    auto parsed = nlohmann::json::parse(emit_report(r, ReportFormat::json));
    CHECK(parsed["cases"][0]["pass"] == false);
    std::string csv = emit_report(r, ReportFormat::csv);
    CHECK(csv.find(",0\n") != std::string::npos);
}

TEST_CASE("json round trip preserves the report fields") {
    SuiteConfig cfg;
    cfg.quick = true;
    auto rep = run_suite("chars", cfg);
    std::string js = emit_report(rep, ReportFormat::json);
    auto parsed = nlohmann::json::parse(js);
    CHECK(parsed["suite"] == "chars");
    CHECK(parsed["summary"]["total"] == rep.total());
    CHECK(parsed["summary"]["passed"] == rep.passed());
    CHECK(parsed["cases"].size() == rep.cases.size());
    for (size_t i = 0; i < rep.cases.size(); ++i) {
        CHECK(parsed["cases"][i]["name"] == rep.cases[i].name);
        CHECK(double(parsed["cases"][i]["rel_err"]) == rep.cases[i].rel_err);
    }
}

TEST_CASE("identical config gives byte-identical json") {
    SuiteConfig cfg;
    cfg.quick = true;
    auto a = emit_report(run_suite("group", cfg), ReportFormat::json);
    auto b = emit_report(run_suite("group", cfg), ReportFormat::json);
    CHECK(a == b);
    CHECK(a.find("wall") == std::string::npos); // wall time stays out of json
}

TEST_CASE("unknown suite raises") {
    SuiteConfig cfg;
    CHECK_THROWS(run_suite("nonsense", cfg));
}
