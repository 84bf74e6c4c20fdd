#include "jtwist/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

using namespace jtwist;

namespace {

Rational rat(long p, long q = 1) { return Rational(p, q); }

// A deliberately small matrix so the driver tests stay quick; the full
// default configuration is exercised by the acceptance binary.
SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.u_list = {rat(0), rat(1, 2)};
    cfg.order = 3;
    return cfg;
}

}  // namespace

TEST_CASE("suite registry", "[verify]") {
    CHECK(suite_names().size() == 14);
    for (const std::string& name : suite_names()) {
        CHECK(is_suite_name(name));
        // Registry names double as report identities, so they must be stable
        // flag-friendly tokens.
        CHECK(name.find(' ') == std::string::npos);
    }
    CHECK_FALSE(is_suite_name("all"));  // "all" is CLI sugar, not a suite
    CHECK_FALSE(is_suite_name("cocycles"));
}

TEST_CASE("driver runs one report per parameter value", "[verify]") {
    const SuiteConfig cfg = small_config();
    for (const std::string& name : {"cocycle", "kappa-minkowski", "realization", "kinverse"}) {
        const auto reports = run_suite(name, cfg);
        REQUIRE(reports.size() == cfg.u_list.size());
        for (const auto& rep : reports) {
            INFO(rep.line());
            CHECK(rep.identity == name);
            CHECK(rep.pass);
            CHECK(rep.residual == "0");
        }
        CHECK(reports[0].u < reports[1].u);
    }
}

TEST_CASE("driver folds both default directions", "[verify]") {
    // With an explicit direction the fold collapses to a single spec; the
    // report count stays one per u either way, so distinguish the two by a
    // direction that only satisfies the identities when actually used.
    SuiteConfig cfg = small_config();
    cfg.v = skew_direction(2);
    const auto reports = run_suite("kappa-minkowski", cfg);
    REQUIRE(reports.size() == 2);
    for (const auto& rep : reports) CHECK(rep.pass);

    cfg.v = std::vector<Rational>{rat(1)};  // wrong size for dim = 2
    CHECK_THROWS_AS(run_suite("kappa-minkowski", cfg), std::invalid_argument);
}

TEST_CASE("driver rejects malformed requests", "[verify]") {
    SuiteConfig cfg = small_config();
    CHECK_THROWS_AS(run_suite("unheard-of", cfg), std::invalid_argument);

    cfg.order = 1;
    CHECK_THROWS_AS(run_suite("cocycle", cfg), std::invalid_argument);

    cfg.order = 2;
    CHECK_THROWS_AS(run_suite("logexp", cfg), std::invalid_argument);  // needs three grades

    cfg.order = 3;
    cfg.dim = 1;
    CHECK_THROWS_AS(run_suite("kappa-minkowski", cfg), std::invalid_argument);
}

TEST_CASE("run_all covers the registry in deterministic order", "[verify]") {
    SuiteConfig cfg = small_config();
    cfg.u_list = {rat(1, 2)};
    cfg.samples = 50;  // keep the sampling suite quick
    const auto reports = run_all(cfg);
    REQUIRE(reports.size() == suite_names().size());

    std::vector<std::string> seen;
    for (const auto& rep : reports) {
        INFO(rep.line());
        CHECK(rep.pass);
        seen.push_back(rep.identity);
    }
    CHECK(std::is_sorted(seen.begin(), seen.end()));

    std::vector<std::string> expected = suite_names();
    std::sort(expected.begin(), expected.end());
    CHECK(seen == expected);
}

TEST_CASE("report ordering is by identity then parameter", "[verify]") {
    std::vector<VerificationReport> reports(4);
    reports[0].identity = "ode";
    reports[0].u = rat(2);
    reports[1].identity = "cocycle";
    reports[1].u = rat(1, 2);
    reports[2].identity = "ode";
    reports[2].u = rat(-1, 3);
    reports[3].identity = "cocycle";
    reports[3].u = rat(0);
    sort_reports(reports);
    CHECK(reports[0].identity == "cocycle");
    CHECK(reports[0].u == rat(0));
    CHECK(reports[1].u == rat(1, 2));
    CHECK(reports[2].identity == "ode");
    CHECK(reports[2].u == rat(-1, 3));
    CHECK(reports[3].u == rat(2));
}

TEST_CASE("reports round-trip through JSON", "[verify]") {
    VerificationReport rep;
    rep.identity = "cocycle";
    rep.u = rat(-1, 3);
    rep.order = 4;
    rep.pass = false;
    rep.residual = "A⊗D⊗1";
    rep.ms = 12.5;

    const nlohmann::json j = report_to_json(rep);
    CHECK(j.size() == 6);  // exactly the documented keys
    CHECK(j.at("identity") == "cocycle");
    CHECK(j.at("u") == "-1/3");
    CHECK(j.at("order") == 4);
    CHECK(j.at("pass") == false);
    CHECK(j.at("residual") == "A⊗D⊗1");
    CHECK(j.at("ms") == 12.5);

    const VerificationReport back = report_from_json(j);
    CHECK(back.identity == rep.identity);
    CHECK(back.u == rep.u);
    CHECK(back.order == rep.order);
    CHECK(back.pass == rep.pass);
    CHECK(back.residual == rep.residual);
    CHECK(back.ms == rep.ms);

    // And via a serialized array, as the CLI writes it.
    const auto arr = nlohmann::json::parse(reports_to_json({rep, rep}).dump());
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(report_from_json(arr[1]).u == rep.u);
}

TEST_CASE("realization tables serialize per parameter and direction", "[verify]") {
    SuiteConfig cfg = small_config();
    const auto tables = realization_tables(cfg);
    REQUIRE(tables.is_array());
    REQUIRE(tables.size() == cfg.u_list.size() * 2);  // axis and skew per u
    for (const auto& entry : tables) {
        CHECK(entry.at("dim") == 2);
        CHECK(entry.at("v").size() == 2);
        CHECK(entry.at("xhat").size() == 2);
        CHECK(entry.at("yhat").size() == 2);
    }
    // The undeformed-limit table is short enough to pin: at u = 0 the first
    // coordinate picks up exactly the dilation correction i a^0 D.
    CHECK(tables[0].at("u") == "0");
}
