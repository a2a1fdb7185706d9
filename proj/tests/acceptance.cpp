// Acceptance run: one PASS/FAIL line per criterion. A criterion passes when
// every selected check passes and the wall time stays inside its budget.
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>

#include "ycl/cli.hpp"

using namespace ycl;

namespace {

struct Run {
    std::string suite;
    SuiteConfig cfg;
};

SuiteConfig config(std::optional<int> N, std::optional<Rational> level, std::vector<std::string> select) {
    SuiteConfig c;
    c.N = N;
    c.level = level;
    c.select = std::move(select);
    return c;
}

struct Criterion {
    int id;
    std::string title;
    std::optional<double> budget;  // seconds
    std::function<std::vector<Run>()> runs;
};

std::vector<Criterion> criteria() {
    std::vector<Criterion> cs;
    cs.push_back({1, "g-series recursion, product formula, printed coefficients (N = 1..5, K = 8)", 1.0, [] {
                      std::vector<Run> r;
                      for (int N = 1; N <= 5; ++N) {
                          SuiteConfig c = config(N, std::nullopt, {"g-series/"});
                          c.g_order = 8;
                          r.push_back({"rmatrix", c});
                      }
                      return r;
                  }});
    cs.push_back({2, "Yang-Baxter over rational functions, R-bar unitarity and crossing to order 8 (N = 2..4)", 10.0,
                   [] {
                       std::vector<Run> r;
                       for (int N = 2; N <= 4; ++N) {
                           SuiteConfig c = config(N, std::nullopt, {"ybe/", "rbar/", "control/"});
                           c.g_order = 8;
                           r.push_back({"rmatrix", c});
                       }
                       return r;
                   }});
    cs.push_back({3, "fusion idempotents for m <= 4 against the Jucys-Murphy oracle (N = 2, 3)", 60.0, [] {
                      std::vector<Run> r;
                      for (int N = 2; N <= 3; ++N) {
                          SuiteConfig c = config(N, std::nullopt, {});
                          c.budgets["m_max"] = 4;
                          r.push_back({"fusion", c});
                      }
                      return r;
                  }});
    cs.push_back({4, "diamond on 200 random words per level and graded leading terms (c = 0, -2, 1)", 300.0, [] {
                      SuiteConfig c = config(2, std::nullopt, {"diamond", "graded-leading-terms"});
                      c.budgets["words"] = 200;
                      c.budgets["word_length"] = 5;
                      return std::vector<Run>{{"pbw", c}};
                  }});
    cs.push_back({5, "rule-based action equals R-bar conjugation on 50 random states per level", 300.0, [] {
                      SuiteConfig c = config(2, std::nullopt, {"cross-validation"});
                      c.budgets["states"] = 50;
                      c.windows["u"] = {-4, 4};
                      return std::vector<Run>{{"pbw", c}};
                  }});
    cs.push_back({6, "immanant coefficients annihilated at the critical level, control at c = 0", 600.0, [] {
                      SuiteConfig c = config(2, Rational(-2), {"invariance/immanant", "control/noncritical-level"});
                      c.windows["u"] = {-6, 6};
                      c.budgets["s_max"] = 4;
                      c.budgets["m_max"] = 3;
                      return std::vector<Run>{{"critical-center", c}};
                  }});
    cs.push_back({7, "qdet coefficients central at c = -2, 0, 1", std::nullopt, [] {
                      std::vector<Run> r;
                      for (int c : {-2, 0, 1})
                          r.push_back({"noncritical-center", config(2, Rational(c), {"qdet-centrality"})});
                      return r;
                  }});
    cs.push_back({8, "Manin matrices with Newton and MacMahon identities (N = 1, 2, m <= 3)", std::nullopt, [] {
                      std::vector<Run> r;
                      for (int N = 1; N <= 2; ++N) {
                          SuiteConfig c = config(N, std::nullopt, {});
                          c.budgets["m_max"] = 3;
                          r.push_back({"manin", c});
                      }
                      return r;
                  }});
    cs.push_back({9, "immanant coefficients up to u^4 commute (m <= 3, N = 2)", std::nullopt, [] {
                      SuiteConfig c = config(2, Rational(-2), {"immanant-commutativity", "control/generators"});
                      c.budgets["m_max"] = 3;
                      c.budgets["commute_u"] = 4;
                      return std::vector<Run>{{"critical-center", c}};
                  }});
    cs.push_back({10, "families h-divisible with Feigin-Frenkel limits, affine invariance, independence", std::nullopt,
                  [] {
                      SuiteConfig c = config(2, Rational(-2), {});
                      c.budgets["m_max"] = 2;
                      c.budgets["r_max"] = 3;
                      c.budgets["s_max"] = 2;
                      return std::vector<Run>{{"classical-ff", c}};
                  }});
    cs.push_back({11, "vertex-algebra axioms on the probe basket to order h^2 (N = 2)", 600.0, [] {
                      SuiteConfig c = config(2, Rational(-2), {});
                      c.windows["h"] = {0, 2};
                      return std::vector<Run>{{"qva-axioms", c}};
                  }});
    cs.push_back({12, "d_r invariant with classical limits at c = 0, 1; dual structure has a noncommutative center",
                  std::nullopt, [] {
                      std::vector<Run> r;
                      for (int c : {0, 1})
                          r.push_back({"noncritical-center",
                                       config(2, Rational(c), {"invariance/d_", "classical-limit/d_", "control/"})});
                      r.push_back({"noncritical-center", config(2, Rational(0), {"dual-structure/"})});
                      return r;
                  }});
    return cs;
}

}  // namespace

int main() {
    int failed = 0;
    for (const Criterion& c : criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> problems;
        int checks = 0;
        for (const Run& run : c.runs()) {
            try {
                for (const Report& r : run_suite(run.suite, run.cfg))
                    for (const CheckResult& ch : r.checks) {
                        ++checks;
                        if (ch.status != CheckStatus::Pass)
                            problems.push_back(r.suite + ":" + ch.name + " [" + status_name(ch.status) + "] " +
                                               ch.detail);
                    }
            } catch (const std::exception& e) {
                problems.push_back(run.suite + ": " + e.what());
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (checks == 0) problems.push_back("no checks selected");
        if (c.budget && secs > *c.budget)
            problems.push_back("runtime " + std::to_string(secs) + " s over budget " + std::to_string(*c.budget) + " s");
        const bool ok = problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << checks
                  << " checks, " << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)\n";
        for (const auto& p : problems) std::cout << "    " << p << "\n";
        std::cout.flush();
    }
    return failed == 0 ? 0 : 1;
}
