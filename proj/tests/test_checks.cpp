#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "qcombin/checks.hpp"

using namespace qcombin::checks;

TEST_CASE("registry ids are unique and runnable at quick bounds") {
    std::set<std::string> ids;
    for (const auto& def : registry()) {
        CHECK(ids.insert(def.id).second);
        CHECK(def.quick_params.size() == def.full_params.size());
        CHECK(def.max_params.size() == def.full_params.size());
    }
    Report report = run_suite(Profile::Quick);
    CHECK(report.checks.size() == registry().size());
    CHECK(report.failed == 0);
    CHECK(report.exploratory == 1);
    CHECK(report.suite_passed());
}

TEST_CASE("single checks") {
    CHECK(run_check("thm5-tangent", {{"n_max", 1}}).status == Status::Pass);
    CHECK(run_check("eq-imp", {{"n_max", 0}}).status == Status::Pass);

    CheckResult lambert = run_check("lambert-cf", {{"depth", 3}, {"order", 5}});
    CHECK(lambert.status == Status::Pass);
    CHECK(lambert.params.at("depth") == 3);

    CheckResult kpath = run_check("kpath-exploratory", {{"n_max", 2}});
    CHECK(kpath.status == Status::Exploratory);
    CHECK(kpath.witness.find("L=1") != std::string::npos);
}

TEST_CASE("unknown ids and parameters are usage errors") {
    CHECK_THROWS_WITH_AS(run_check("no-such-check"),
                         doctest::Contains("valid ids:"), std::invalid_argument);
    CHECK_THROWS_AS(run_check("eq-imp", {{"depth", 3}}), std::invalid_argument);
    // Ceiling guard fires before any computation.
    CHECK_THROWS_WITH_AS(run_check("thm5-tangent", {{"n_max", 50}}),
                         doctest::Contains("feasibility"), std::invalid_argument);
    CHECK_THROWS_AS(run_check("lambert-cf", {{"depth", 2}, {"order", 9}}), std::invalid_argument);
}

TEST_CASE("determinism") {
    CheckResult a = run_check("cauchy-binomial", {{"n_max", 4}});
    CheckResult b = run_check("cauchy-binomial", {{"n_max", 4}});
    CHECK(a.id == b.id);
    CHECK(a.params == b.params);
    CHECK(a.status == b.status);
    CHECK(a.witness == b.witness);
}

TEST_CASE("empty selection gives an empty passing report") {
    Report report = run_suite(Profile::Quick, std::vector<std::string>{});
    CHECK(report.checks.empty());
    CHECK(report.suite_passed());
}

TEST_CASE("selection runs in registry order") {
    Report report = run_suite(Profile::Quick, std::vector<std::string>{"eq-imp", "fig2-e7"});
    REQUIRE(report.checks.size() == 2);
    CHECK(report.checks[0].id == "fig2-e7");
    CHECK(report.checks[1].id == "eq-imp");
}

TEST_CASE("report serialization shape") {
    Report report = run_suite(Profile::Quick, std::vector<std::string>{"fig2-e7", "kpath-exploratory"});
    auto doc = nlohmann::json::parse(report_to_json(report));
    CHECK(doc.at("suite") == "pass");
    CHECK(doc.at("profile") == "quick");
    REQUIRE(doc.at("checks").size() == 2);
    CHECK(doc["checks"][0].at("id") == "fig2-e7");
    CHECK(doc["checks"][0].at("status") == "pass");
    CHECK(doc["checks"][0].at("witness").is_null());
    CHECK(doc["checks"][0].at("millis").is_number_integer());
    CHECK(doc["checks"][1].at("status") == "exploratory");
    CHECK(doc["checks"][1].at("witness").is_string());
    CHECK(doc.at("summary").at("passed") == 1);
    CHECK(doc.at("summary").at("failed") == 0);
    CHECK(doc.at("summary").at("exploratory") == 1);

    auto single = nlohmann::json::parse(result_to_json(report.checks[0]));
    CHECK(single.at("id") == "fig2-e7");
}

TEST_CASE("tables") {
    std::string euler = emit_table(TableKind::Euler, 7, TableFormat::Md);
    CHECK(euler.find("| 7 | 272 |") != std::string::npos);

    std::string paths_csv = emit_table(TableKind::PathCounts, 3, TableFormat::Csv);
    CHECK(paths_csv.find("0,\"1\"") != std::string::npos);
    CHECK(paths_csv.find("2,\"2\"") != std::string::npos);
    CHECK(paths_csv.find("3,\"5\"") != std::string::npos);

    auto qe = nlohmann::json::parse(emit_table(TableKind::QEuler, 3, TableFormat::Json));
    CHECK(qe.at("kind") == "q_euler");
    REQUIRE(qe.at("rows").size() == 4);
    CHECK(qe["rows"][0].at("value") == "1");
    CHECK(qe["rows"][1].at("value") == "1");
    CHECK(qe["rows"][2].at("value") == "1");
    CHECK(qe["rows"][3].at("value") == "q + q^2");

    std::string f = emit_table(TableKind::FPoly, 4, TableFormat::Md, 3);
    CHECK(f.find("| 4 | q + q^2 + q^3 |") != std::string::npos);

    CHECK_THROWS_AS(emit_table(TableKind::QEuler, 40, TableFormat::Md), std::invalid_argument);
}
