#include "doctest.h"
#include "json.hpp"
#include "ycl/cli.hpp"
#include "ycl/fusion.hpp"
#include "ycl/tensor.hpp"

using namespace ycl;
using nlohmann::json;

TEST_CASE("command-line forms parse or fail loudly") {
    auto w = parse_window("z=-3..4");
    CHECK(w.first == "z");
    CHECK(w.second == std::make_pair(-3, 4));
    CHECK_THROWS_AS(parse_window("z=-3.4"), ConfigError);
    CHECK_THROWS_AS(parse_window("z=a..4"), ConfigError);
    CHECK(parse_budget("s_max=4") == std::make_pair(std::string("s_max"), 4));
    CHECK_THROWS_AS(parse_budget("s_max"), ConfigError);
    CHECK(parse_shape("2,1").parts() == std::vector<int>{2, 1});
    CHECK_THROWS_AS(parse_shape("1,2"), ConfigError);
    CHECK_THROWS_AS(parse_shape("2,,1"), ConfigError);
}

TEST_CASE("configuration invariants") {
    SuiteConfig c;
    CHECK_NOTHROW(validate(c));
    c.windows["z"] = {2, 1};
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.windows.clear();
    c.windows["q"] = {0, 1};
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.windows.clear();
    c.budgets["nonsense"] = 1;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.budgets.clear();
    c.N = 2;
    c.shapes.push_back(YoungDiagram({1, 1, 1}));
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.shapes.clear();
    c.N = 0;
    CHECK_THROWS_AS(validate(c), ConfigError);
    CHECK_THROWS_AS(run_suite("no-such-suite", SuiteConfig{}), ConfigError);
}

TEST_CASE("reports are deterministic and follow the exit-code contract") {
    SuiteConfig c;
    c.N = 2;
    std::vector<Report> a = run_suite("rmatrix", c), b = run_suite("rmatrix", c);
    CHECK(report_json(a, false) == report_json(b, false));
    CHECK(exit_status(a, true) == 0);
    json j = json::parse(report_json(a));
    CHECK(j["schema"] == "ycl-report/1");
    CHECK(j["reports"][0]["suite"] == "rmatrix");
    CHECK(j["reports"][0]["summary"]["fail"] == 0);
    CHECK(j["reports"][0]["checks"][0].contains("elapsed"));

    // An order-2 g-series cannot reach u^-3: a truncation skip, not a failure.
    c.g_order = 2;
    c.select = {"g-series/leading"};
    std::vector<Report> s = run_suite("rmatrix", c);
    REQUIRE(s[0].checks.size() == 1);
    CHECK(s[0].checks[0].status == CheckStatus::SkippedTruncation);
    CHECK(s[0].checks[0].detail.find("u^-") != std::string::npos);
    CHECK(exit_status(s, false) == 0);
    CHECK(exit_status(s, true) == 3);

    Report bad;
    bad.checks.push_back({"x", CheckStatus::Fail, "", 0});
    CHECK(exit_status({bad}, false) == 1);
    CHECK(exit_status(s, true) == 3);
}

TEST_CASE("critical-center at c = 0 runs only the negative control") {
    SuiteConfig c;
    c.N = 2;
    c.level = Rational(0);
    c.shapes = {YoungDiagram({2})};
    c.windows["u"] = {0, 2};
    c.budgets["s_max"] = 2;
    c.select = {"control/noncritical-level"};
    std::vector<Report> r = run_suite("critical-center", c);
    REQUIRE(r[0].checks.size() == 1);
    CHECK(r[0].checks[0].status == CheckStatus::Pass);
}

TEST_CASE("compute examples") {
    json g = json::parse(compute_json("g-series", {{"N", "2"}, {"K", "3"}}));
    CHECK(g["coefficients"] == json::array({"1/2", "5/8", "11/16"}));
    CHECK(g["schema"] == "ycl-report/1");

    // H^(2) for N = 2 is the symmetrizer on C^2 x C^2.
    json e = json::parse(compute_json("idempotent", {{"shape", "2"}, {"N", "2"}}));
    CHECK(e["matrix"]["dim"] == 4);
    RatOp H(2, 2);
    for (const auto& t : e["matrix"]["entries"])
        H.set(t[0].get<std::uint64_t>(), t[1].get<std::uint64_t>(), parse_rational(t[2].get<std::string>()));
    CHECK(H == symmetrizer(2, 2));

    // N = 1: qdet T+(u) = t+(u) = 1 - sum_s t^(-s) u^{s-1}.
    json q = json::parse(compute_json("qdet", {{"N", "1"}, {"window", "4"}}));
    const json& cs = q["coefficients"];
    CHECK(cs["u^0"] == json({{"1", "1"}, {"t11(-1)", "-1"}}));
    for (int k = 1; k <= 4; ++k)
        CHECK(cs["u^" + std::to_string(k)] == json({{"t11(-" + std::to_string(k + 1) + ")", "-1"}}));
    CHECK(!cs.contains("u^5"));

    CHECK_THROWS_AS(compute_json("nothing", {}), ConfigError);
    CHECK_THROWS_AS(compute_json("idempotent", {{"N", "2"}}), ConfigError);
    CHECK_THROWS_AS(compute_json("idempotent", {{"shape", "1,1,1"}, {"N", "2"}}), ConfigError);
    CHECK_THROWS_AS(compute_json("g-series", {{"K", "x"}}), ConfigError);
}
