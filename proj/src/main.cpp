#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "ycl/cli.hpp"

using namespace ycl;

namespace {

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) throw ConfigError("cannot write " + out);
    f << text;
    return 0;
}

// key=value, --key=value or --key value.
std::map<std::string, std::string> parse_params(const std::vector<std::string>& args) {
    std::map<std::string, std::string> p;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string a = args[i];
        while (!a.empty() && a.front() == '-') a.erase(a.begin());
        const auto eq = a.find('=');
        if (eq != std::string::npos) {
            p[a.substr(0, eq)] = a.substr(eq + 1);
        } else if (i + 1 < args.size()) {
            p[a] = args[++i];
        } else {
            throw ConfigError("parameter '" + a + "' has no value");
        }
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for the double Yangian of gl_N"};
    app.require_subcommand(1);

    std::string suite, out, level;
    std::optional<int> N, g_order;
    std::vector<std::string> windows, shapes, budgets, select;
    unsigned seed = 2024;
    bool strict = false, no_timing = false;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "rmatrix, fusion, pbw, critical-center, noncritical-center, manin, "
                                       "classical-ff, qva-axioms or all")
        ->required();
    verify->add_option("--N", N, "Rank N");
    verify->add_option("--level", level, "Level c as p/q");
    verify->add_option("--g-order", g_order, "Order K of the g-series");
    verify->add_option("--window", windows, "var=lo..hi (u, v, z, h)");
    verify->add_option("--shape", shapes, "Young diagram a,b,c");
    verify->add_option("--budget", budgets, "key=val probe budget");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--check", select, "Run only checks whose names contain this text");
    verify->add_flag("--strict", strict, "Exit 3 when a check was skipped for truncation");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed times from the report");
    verify->add_option("--out", out, "Write the report here instead of stdout");

    std::string entity;
    CLI::App* compute = app.add_subcommand("compute", "Print an exact object");
    compute->add_option("entity", entity, "g-series, idempotent, immanant, qdet, phi, psi, theta, ff-generator")
        ->required();
    compute->add_option("--out", out, "Write the object here instead of stdout");
    compute->allow_extras();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            SuiteConfig cfg;
            cfg.N = N;
            cfg.g_order = g_order;
            if (!level.empty()) {
                try {
                    cfg.level = parse_rational(level);
                } catch (const std::exception&) {
                    throw ConfigError("malformed level '" + level + "'");
                }
            }
            for (const auto& w : windows) cfg.windows.insert(parse_window(w));
            for (const auto& s : shapes) cfg.shapes.push_back(parse_shape(s));
            for (const auto& b : budgets) cfg.budgets.insert(parse_budget(b));
            cfg.seed = seed;
            cfg.strict = strict;
            cfg.select = select;
            std::vector<Report> reports = run_suite(suite, cfg);
            emit(report_json(reports, !no_timing), out);
            return exit_status(reports, strict);
        }
        return emit(compute_json(entity, parse_params(compute->remaining())), out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}
