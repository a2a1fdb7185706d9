#include <set>

#include "json.hpp"
#include "ycl/center.hpp"
#include "ycl/cli.hpp"
#include "ycl/diffop.hpp"
#include "ycl/errors.hpp"
#include "ycl/tensor.hpp"

namespace ycl {

using nlohmann::json;

namespace {

const std::set<std::string> kWindowVars{"u", "v", "z", "h"};
const std::set<std::string> kBudgetKeys{"cap",   "commute_cap", "commute_u", "depth",  "m_max", "probes",
                                        "qdet_cap", "r_max",   "s_max",     "states", "word_length", "words"};

int to_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("malformed " + what + ": '" + text + "'");
    }
}

std::string trunc_name(Trunc t) {
    switch (t) {
        case Trunc::Exact: return "exact";
        case Trunc::Laurent: return "laurent";
        case Trunc::Taylor: return "taylor";
    }
    return "?";
}

std::string exps_key(const Exps& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s;
}

json series_json(const TruncSeries& s) {
    json vars = json::array(), wins = json::array(), terms = json::object();
    for (std::size_t i = 0; i < s.order().size(); ++i) {
        vars.push_back(s.order().name(i));
        const Window& w = s.windows()[i];
        wins.push_back({{"lo", w.lo}, {"hi", w.hi}, {"trunc", trunc_name(w.trunc)}});
    }
    for (const auto& [e, c] : s.terms()) terms[exps_key(e)] = to_string(c);
    return {{"variable-order", vars}, {"window", wins}, {"terms", terms}};
}

json matrix_json(const RatOp& op) {
    json entries = json::array();
    for (const auto& [key, c] : op.entries()) entries.push_back({key.first, key.second, to_string(c)});
    return {{"N", op.N()}, {"legs", op.legs()}, {"dim", op.dim()}, {"entries", entries}};
}

json element_json(const PBWEngine& e, const Element& x) {
    json out = json::object();
    for (const auto& [m, c] : x.terms()) out[m.empty() ? "1" : e.str(m)] = to_string(c);
    return out;
}

json upoly_json(const PBWEngine& e, const UPoly& p) {
    json out = json::object();
    for (const auto& [k, x] : p.coeffs()) out["u^" + std::to_string(k)] = element_json(e, x);
    return out;
}

json config_json(const SuiteConfig& c) {
    json j = json::object();
    if (c.N) j["N"] = *c.N;
    if (c.level) j["level"] = to_string(*c.level);
    if (c.g_order) j["g_order"] = *c.g_order;
    json w = json::object();
    for (const auto& [v, lh] : c.windows) w[v] = {lh.first, lh.second};
    j["windows"] = w;
    json shapes = json::array();
    for (const auto& mu : c.shapes) shapes.push_back(mu.parts());
    j["shapes"] = shapes;
    j["budgets"] = c.budgets;
    j["seed"] = c.seed;
    j["strict"] = c.strict;
    if (!c.select.empty()) j["select"] = c.select;
    return j;
}

using Params = std::map<std::string, std::string>;

int param_int(const Params& p, const std::string& key, int fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : to_int(it->second, key);
}

Rational param_rational(const Params& p, const std::string& key, const Rational& fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    try {
        return parse_rational(it->second);
    } catch (const std::exception&) {
        throw ConfigError("malformed " + key + ": '" + it->second + "'");
    }
}

void require_n(int N) {
    if (N < 1 || N > 9) throw ConfigError("N must lie in 1..9");
}

StandardTableau pick_tableau(const Params& p, int N) {
    auto it = p.find("shape");
    if (it == p.end()) throw ConfigError("missing parameter shape");
    YoungDiagram mu = parse_shape(it->second);
    if (mu.length() > N) throw ConfigError("shape " + mu.str() + " has more than N rows");
    std::vector<StandardTableau> tabs = standard_tableaux(mu);
    const int i = param_int(p, "tableau", 0);
    if (i < 0 || i >= static_cast<int>(tabs.size()))
        throw ConfigError("tableau index out of range 0.." + std::to_string(tabs.size() - 1));
    return tabs[i];
}

FamilyKind family_kind(const std::string& name) {
    if (name == "phi") return FamilyKind::Phi;
    if (name == "psi") return FamilyKind::Psi;
    if (name == "theta") return FamilyKind::Theta;
    throw ConfigError("unknown family '" + name + "' (phi, psi, theta)");
}

json compute_entity(const std::string& entity, const Params& p) {
    const int N = param_int(p, "N", 2);
    require_n(N);
    json out{{"entity", entity}, {"N", N}};
    if (entity == "g-series") {
        const int K = param_int(p, "K", 8);
        if (K < 0) throw ConfigError("K must be nonnegative");
        TruncSeries g = compute_g(N, K);
        json cs = json::array();
        for (int k = 1; k <= K; ++k) cs.push_back(to_string(g.coeff1(-k)));
        out["K"] = K;
        out["coefficients"] = cs;  // u^-1 .. u^-K
        out["series"] = series_json(g);
        return out;
    }
    if (entity == "idempotent") {
        StandardTableau U = pick_tableau(p, N);
        out["tableau"] = U.str();
        out["matrix"] = matrix_json(fusion_idempotent(U, N));
        return out;
    }
    const Rational c = param_rational(p, "level", Rational(-N));
    const int cap = param_int(p, "cap", 6);
    if (cap < 1) throw ConfigError("cap must be positive");
    out["level"] = to_string(c);
    out["cap"] = cap;
    DoubleYangian Y(N, c);
    Y.set_cap(cap);
    if (entity == "immanant") {
        StandardTableau U = pick_tableau(p, N);
        out["tableau"] = U.str();
        out["coefficients"] = upoly_json(Y, quantum_immanant(Y, U));
        return out;
    }
    if (entity == "qdet") {
        const int window = param_int(p, "window", 4);
        UPoly q = qdet_plus(Y), kept;
        for (int k = 0; k <= window; ++k) kept.add(k, q.coeff(k));
        out["window"] = window;
        out["coefficients"] = upoly_json(Y, kept);
        return out;
    }
    if (entity == "phi" || entity == "psi" || entity == "theta") {
        const int m = param_int(p, "m", 1);
        if (m < 1) throw ConfigError("m must be positive");
        FamilySeries f = family_series(Y, family_kind(entity), m);
        json cs = json::object();
        for (const auto& [jn, x] : f.series.coeffs())
            cs["u^" + std::to_string(jn.first) + " h^" + std::to_string(jn.second)] = element_json(Y, x);
        out["m"] = m;
        out["h_divisible"] = f.divisible;
        out["exact_u"] = f.exact_u;
        out["coefficients"] = cs;
        return out;
    }
    if (entity == "ff-generator") {
        const int m = param_int(p, "m", 1);
        if (m < 1) throw ConfigError("m must be positive");
        auto it = p.find("kind");
        FamilyKind kind = family_kind(it == p.end() ? "phi" : it->second);
        LoopEngine U(N, c);
        U.set_cap(cap);
        out["m"] = m;
        out["coefficients"] = upoly_json(U, ff_generator(U, kind, m));
        return out;
    }
    throw ConfigError("unknown entity '" + entity + "'");
}

}  // namespace

std::pair<int, int> SuiteConfig::window_or(const std::string& var, std::pair<int, int> fallback) const {
    auto it = windows.find(var);
    return it == windows.end() ? fallback : it->second;
}

int SuiteConfig::budget_or(const std::string& key, int fallback) const {
    auto it = budgets.find(key);
    return it == budgets.end() ? fallback : it->second;
}

std::pair<std::string, std::pair<int, int>> parse_window(const std::string& text) {
    const auto eq = text.find('='), dots = text.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
        throw ConfigError("window must read var=lo..hi, got '" + text + "'");
    const std::string var = text.substr(0, eq);
    const int lo = to_int(text.substr(eq + 1, dots - eq - 1), "window bound");
    const int hi = to_int(text.substr(dots + 2), "window bound");
    return {var, {lo, hi}};
}

std::pair<std::string, int> parse_budget(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError("budget must read key=val, got '" + text + "'");
    return {text.substr(0, eq), to_int(text.substr(eq + 1), "budget value")};
}

YoungDiagram parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        parts.push_back(to_int(piece, "shape part"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return YoungDiagram(parts);
    } catch (const UsageError& e) {
        throw ConfigError(std::string("malformed shape: ") + e.what());
    }
}

void validate(const SuiteConfig& cfg) {
    if (cfg.N) require_n(*cfg.N);
    if (cfg.g_order && *cfg.g_order < 0) throw ConfigError("g-order must be nonnegative");
    for (const auto& [v, lh] : cfg.windows) {
        if (!kWindowVars.count(v)) throw ConfigError("unknown window variable '" + v + "' (u, v, z, h)");
        if (lh.first > lh.second) throw ConfigError("window " + v + " has lo > hi");
    }
    if (auto it = cfg.windows.find("h"); it != cfg.windows.end() && it->second.first < 0)
        throw ConfigError("h window must start at a nonnegative power");
    for (const auto& [k, val] : cfg.budgets) {
        if (!kBudgetKeys.count(k)) throw ConfigError("unknown budget key '" + k + "'");
        if (val < 0) throw ConfigError("budget " + k + " must be nonnegative");
    }
    const int N = cfg.n_or(2);
    for (const auto& mu : cfg.shapes)
        if (mu.length() > N) throw ConfigError("shape " + mu.str() + " has more than N rows");
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::SkippedTruncation: return "skipped-truncation";
    }
    return "?";
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

bool Report::has_skips() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::SkippedTruncation) return true;
    return false;
}

int exit_status(const std::vector<Report>& reports, bool strict) {
    bool skips = false;
    for (const auto& r : reports) {
        if (!r.all_pass()) return 1;
        skips |= r.has_skips();
    }
    return strict && skips ? 3 : 0;
}

std::string report_json(const std::vector<Report>& reports, bool timing) {
    json rs = json::array();
    bool strict = false;
    for (const auto& r : reports) {
        json checks = json::array();
        std::map<std::string, int> tally{{"pass", 0}, {"fail", 0}, {"skipped-truncation", 0}};
        for (const auto& c : r.checks) {
            json e{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
            if (timing) e["elapsed"] = c.elapsed;
            checks.push_back(std::move(e));
            ++tally[status_name(c.status)];
        }
        rs.push_back({{"suite", r.suite}, {"config", config_json(r.config)}, {"checks", checks}, {"summary", tally}});
        strict |= r.config.strict;
    }
    json out{{"schema", "ycl-report/1"}, {"reports", rs}, {"exit_status", exit_status(reports, strict)}};
    return out.dump(2) + "\n";
}

const std::vector<std::string>& entity_names() {
    static const std::vector<std::string> names{"g-series", "idempotent", "immanant", "qdet",
                                                "phi",      "psi",        "theta",    "ff-generator"};
    return names;
}

std::string compute_json(const std::string& entity, const std::map<std::string, std::string>& params) {
    json out = compute_entity(entity, params);
    out["schema"] = "ycl-report/1";
    return out.dump(2) + "\n";
}

}  // namespace ycl
