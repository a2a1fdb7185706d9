#include "ycl/pbw.hpp"

#include <sstream>

namespace ycl {

Element Element::scalar(const Rational& c) {
    Element e;
    e.add_term({}, c);
    return e;
}

Element Element::monomial(const Monomial& m, const Rational& c) {
    Element e;
    e.add_term(m, c);
    return e;
}

Rational Element::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

void Element::add_scaled(const Element& o, const Rational& c) {
    if (c == 0) return;
    for (const auto& [m, v] : o.t_) add_term(m, v * c);
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r.add_scaled(o, 1);
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r.add_scaled(o, -1);
    return r;
}

Element Element::scaled(const Rational& c) const {
    Element r;
    if (c == 0) return r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
    return r;
}

Element Element::filtered(const std::function<bool(const Monomial&)>& keep) const {
    Element r;
    for (const auto& [m, v] : t_)
        if (keep(m)) r.t_.emplace(m, v);
    return r;
}

void PBWEngine::set_cap(std::optional<int> cap) {
    if (cap != cap_) clear_memo();
    cap_ = cap;
}

void PBWEngine::clear_memo() {
    memo_.clear();
    act_memo_.clear();
}

int PBWEngine::weight(const Monomial& m) const {
    int w = 0;
    for (Gen g : m) w += weight(g);
    return w;
}

bool PBWEngine::over_cap(const Monomial& m) const { return cap_ && weight(m) > *cap_; }

Element PBWEngine::mul_gen(Gen g, const Monomial& m) {
    if (m.empty() || !(m[0] < g)) {
        Monomial r;
        r.reserve(m.size() + 1);
        r.push_back(g);
        r.insert(r.end(), m.begin(), m.end());
        if (over_cap(r)) {
            ++dropped_;
            return {};
        }
        return Element::monomial(r);
    }
    // A positive-weight generator never lowers weight.
    if (cap_ && weight(g) > 0 && weight(g) + weight(m) > *cap_) {
        ++dropped_;
        return {};
    }
    Monomial key;
    key.reserve(m.size() + 1);
    key.push_back(g);
    key.insert(key.end(), m.begin(), m.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Monomial rest(m.begin() + 1, m.end());
    Element res;
    for (const Word& w : swap(g, m[0])) {
        Element x = Element::monomial(rest);
        for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) x = mul_gen(*it, x);
        res.add_scaled(x, w.coef);
    }
    memo_.emplace(std::move(key), res);
    return res;
}

Element PBWEngine::mul_gen(Gen g, const Element& x) {
    Element r;
    for (const auto& [m, c] : x.terms()) r.add_scaled(mul_gen(g, m), c);
    return r;
}

Element PBWEngine::mul(const Element& a, const Element& b) {
    Element r;
    for (const auto& [m, c] : a.terms()) {
        Element x = b;
        for (auto it = m.rbegin(); it != m.rend(); ++it) x = mul_gen(*it, x);
        r.add_scaled(x, c);
    }
    return r;
}

Element PBWEngine::word(const std::vector<Gen>& gens) {
    Element x = Element::scalar(1);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) x = mul_gen(*it, x);
    return x;
}

Element PBWEngine::commutator(const Element& a, const Element& b) { return mul(a, b) - mul(b, a); }

Element PBWEngine::act(Gen g, const Monomial& m) {
    if (!kills_vacuum(g)) return mul_gen(g, m);
    if (m.empty()) return {};
    Monomial key;
    key.reserve(m.size() + 1);
    key.push_back(g);
    key.insert(key.end(), m.begin(), m.end());
    if (auto it = act_memo_.find(key); it != act_memo_.end()) return it->second;

    Monomial rest(m.begin() + 1, m.end());
    Element res;
    for (const Word& w : swap(g, m[0])) {
        Element x = Element::monomial(rest);
        for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) x = act(*it, x);
        res.add_scaled(x, w.coef);
    }
    act_memo_.emplace(std::move(key), res);
    return res;
}

Element PBWEngine::act(Gen g, const Element& x) {
    Element r;
    for (const auto& [m, c] : x.terms()) r.add_scaled(act(g, m), c);
    return r;
}

Element PBWEngine::act_word(const std::vector<Gen>& gens, const Element& x) {
    Element r = x;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) r = act(*it, r);
    return r;
}

std::string PBWEngine::str(const Monomial& m) const {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "*" : "") + name(m[i]);
    return s;
}

std::string PBWEngine::str(const Element& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream s;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) s << " + ";
        first = false;
        s << '(' << to_string(c) << ')';
        if (!m.empty()) s << '*' << str(m);
    }
    return s.str();
}

LoopEngine::LoopEngine(int N, Rational K) : N_(N), K_(std::move(K)) {
    if (N < 1 || N > 255) throw UsageError("LoopEngine: N out of range");
}

Gen LoopEngine::E(int i, int j, int r) {
    return (static_cast<Gen>(r + 2048) << 16) | (static_cast<Gen>(i) << 8) | static_cast<Gen>(j);
}

std::vector<Word> LoopEngine::swap(Gen x, Gen y) const {
    int i = gi(x), j = gj(x), r = gr(x);
    int k = gi(y), l = gj(y), s = gr(y);
    std::vector<Word> out;
    out.push_back({1, {y, x}});
    if (k == j) out.push_back({1, {E(i, l, r + s)}});
    if (i == l) out.push_back({-1, {E(k, j, r + s)}});
    if (r != 0 && r == -s) {
        Rational c = Rational((k == j && i == l) ? 1 : 0) - Rational((i == j && k == l) ? 1 : 0) / N_;
        if (c != 0) out.push_back({Rational(r) * K_ * c, {}});
    }
    return out;
}

std::string LoopEngine::name(Gen g) const {
    return "E" + std::to_string(gi(g)) + std::to_string(gj(g)) + "[" + std::to_string(gr(g)) + "]";
}

}  // namespace ycl
