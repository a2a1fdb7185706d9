#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ycl/fusion.hpp"
#include "ycl/scalars.hpp"

namespace ycl {

// Malformed command line or suite configuration (exit status 2).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unset fields fall back to per-suite defaults.
struct SuiteConfig {
    std::optional<int> N;
    std::optional<Rational> level;
    std::optional<int> g_order;
    std::map<std::string, std::pair<int, int>> windows;  // variable -> [lo, hi]
    std::vector<YoungDiagram> shapes;
    std::map<std::string, int> budgets;
    unsigned seed = 2024;
    bool strict = false;
    std::vector<std::string> select;  // run only checks whose names contain one of these

    int n_or(int fallback) const { return N.value_or(fallback); }
    Rational level_or(const Rational& fallback) const { return level.value_or(fallback); }
    std::pair<int, int> window_or(const std::string& var, std::pair<int, int> fallback) const;
    int budget_or(const std::string& key, int fallback) const;
};

// Parsers for the command-line forms; all throw ConfigError.
std::pair<std::string, std::pair<int, int>> parse_window(const std::string& text);  // var=lo..hi
std::pair<std::string, int> parse_budget(const std::string& text);                  // key=val
YoungDiagram parse_shape(const std::string& text);                                  // a,b,c
void validate(const SuiteConfig& cfg);

enum class CheckStatus { Pass, Fail, SkippedTruncation };
std::string status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    double elapsed = 0;  // seconds; excluded from the deterministic body
};

struct Report {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    bool has_skips() const;
};

const std::vector<std::string>& suite_names();
// "all" runs every suite in suite_names() order. Unknown names throw ConfigError.
std::vector<Report> run_suite(const std::string& name, const SuiteConfig& cfg);

// 0 all pass, 1 any failure, 3 a truncation skip under strict.
int exit_status(const std::vector<Report>& reports, bool strict);

// Reports as "ycl-report/1" JSON. With timing off the output is a pure
// function of (config, seed).
std::string report_json(const std::vector<Report>& reports, bool timing = true);

// Exact object for compute <entity>; params are key=value strings.
const std::vector<std::string>& entity_names();
std::string compute_json(const std::string& entity, const std::map<std::string, std::string>& params);

}  // namespace ycl
