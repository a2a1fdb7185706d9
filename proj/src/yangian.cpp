#include "ycl/yangian.hpp"

#include <algorithm>
#include <optional>

namespace ycl {

DoubleYangian::DoubleYangian(int N, Rational level) : N_(N), c_(std::move(level)) {
    if (N < 1 || N > 255) throw UsageError("DoubleYangian: N out of range");
    set_cap(kDefaultCap);
}

Gen DoubleYangian::t(int i, int j, int r) {
    if (r == 0 || r <= -2048 || r >= 2048) throw UsageError("generator index r out of range");
    Gen fam = r > 0 ? 1u : 0u;
    return (fam << 28) | (static_cast<Gen>(i) << 20) | (static_cast<Gen>(j) << 12) |
           static_cast<Gen>(r + 2048);
}

std::string DoubleYangian::name(Gen g) const {
    return "t" + std::to_string(gi(g)) + std::to_string(gj(g)) + "(" + std::to_string(gr(g)) + ")";
}

int DoubleYangian::degree(const Monomial& m) {
    int d = 0;
    for (Gen g : m) d += degree(g);
    return d;
}

int DoubleYangian::yangian_excess(const std::vector<Gen>& w) {
    int e = 0;
    for (Gen g : w)
        if (!is_dual(g)) e += gr(g) - 1;
    return e;
}

Element DoubleYangian::t_plus_coeff(int i, int j, int k) const {
    Element e;
    if (k == 0 && i == j) e.add_term({}, 1);
    e.add_term({t(i, j, -k - 1)}, -1);
    return e;
}

std::vector<Word> DoubleYangian::swap(Gen x, Gen y) const {
    int i = gi(x), j = gj(x), r = gr(x);
    int k = gi(y), l = gj(y), s = gr(y);
    std::vector<Word> out;
    if (is_dual(x) == is_dual(y) && i == k && j == l) return {{1, {y, x}}};
    if (is_dual(x) && is_dual(y)) {
        int a = -r, b = -s;
        out.push_back({1, {y, x}});
        if (k == j) out.push_back({1, {t(i, l, -a - b)}});
        if (i == l) out.push_back({-1, {t(k, j, -a - b)}});
        for (int q = 1; q <= std::min(a, b); ++q) {
            out.push_back({1, {t(k, j, -a - b + q - 1), t(i, l, -q)}});
            out.push_back({-1, {t(k, j, -q), t(i, l, -a - b + q - 1)}});
        }
        return out;
    }
    if (!is_dual(x) && !is_dual(y)) {
        out.push_back({1, {y, x}});
        for (int q = 1; q <= std::min(r, s); ++q) {
            if (q == 1) {
                if (k == j) out.push_back({1, {t(i, l, r + s - 1)}});
                if (i == l) out.push_back({-1, {t(k, j, r + s - 1)}});
            } else {
                out.push_back({1, {t(k, j, q - 1), t(i, l, r + s - q)}});
                out.push_back({-1, {t(k, j, r + s - q), t(i, l, q - 1)}});
            }
        }
        return out;
    }
    if (!is_dual(x) && is_dual(y)) return mixed_rule(i, j, r, k, l, -s);
    throw InconsistencyError("swap called on an ordered pair");
}

const std::vector<std::array<Rational, 4>>& DoubleYangian::mixed_coefficients(int K) const {
    if (static_cast<int>(fcoef_.size()) > K) return fcoef_;
    int KK = std::max(K, 2 * static_cast<int>(fcoef_.size()));
    Rational half = c_ / 2;
    TruncSeries gm = g_at(N_, 1, -half, KK);
    TruncSeries gp = g_at(N_, 1, half, KK);
    TruncSeries gamma = gm * series_invert(gp);
    TruncSeries ip = inverse_linear(1, half, KK);
    TruncSeries im = inverse_linear(1, -half, KK);
    TruncSeries one = TruncSeries::constant(gm.order(), 1);
    TruncSeries f1 = gamma * series_invert(one - ip * ip);
    TruncSeries f2 = -(f1 * im);
    TruncSeries f3 = f1 * ip;
    TruncSeries f4 = -(f1 * ip * im);
    fcoef_.assign(KK + 1, {});
    for (int p = 0; p <= KK; ++p)
        fcoef_[p] = {f1.coeff1(-p), f2.coeff1(-p), f3.coeff1(-p), f4.coeff1(-p)};
    return fcoef_;
}

std::vector<Word> DoubleYangian::mixed_rule(int i, int j, int r, int k, int l, int s) const {
    auto key = std::make_tuple(i, j, r, k, l, s);
    if (auto it = mixed_cache_.find(key); it != mixed_cache_.end()) return it->second;
    const auto& f = mixed_coefficients(r);
    // t_ij(u) t+_kl(v) = sum_n F_n(u - v) t+_{a b}(v) t_{c d}(u); read off u^{-r} v^{s-1}
    const std::array<std::array<int, 4>, 4> legs{{{k, l, i, j}, {k, j, i, l}, {i, l, k, j}, {i, j, k, l}}};
    std::map<std::vector<Gen>, Rational> acc;
    for (int n = 0; n < 4; ++n) {
        auto [a, b, c, d] = legs[n];
        for (int p = 0; p <= r; ++p) {
            int qmax = p == 0 ? 0 : std::min(r - p, s - 1);
            for (int q = 0; q <= qmax; ++q) {
                int kk = s - 1 - q, rp = r - p - q;
                Rational coef = f[p][n];
                if (p > 0) coef *= Rational(binomial(static_cast<long>(p + q - 1), static_cast<long>(q)));
                if (coef == 0) continue;
                coef = -coef;
                std::vector<std::pair<Rational, std::optional<Gen>>> tau, y;
                if (kk == 0 && a == b) tau.push_back({1, std::nullopt});
                tau.push_back({-1, t(a, b, -kk - 1)});
                if (rp == 0) {
                    if (c == d) y.push_back({1, std::nullopt});
                } else {
                    y.push_back({1, t(c, d, rp)});
                }
                for (const auto& [tc, tg] : tau)
                    for (const auto& [yc, yg] : y) {
                        std::vector<Gen> w;
                        if (tg) w.push_back(*tg);
                        if (yg) w.push_back(*yg);
                        acc[w] += coef * tc * yc;
                    }
            }
        }
    }
    // the v^0 coefficient of t+_kl(v) carries d_kl, which pairs with t_ij^(r)
    if (s == 1 && k == l) acc[{t(i, j, r)}] += 1;
    std::vector<Word> out;
    for (const auto& [w, c] : acc)
        if (c != 0) out.push_back({c, w});
    mixed_cache_.emplace(key, out);
    return out;
}

VacuumState product_state(DoubleYangian& Y, const ProductState& s) {
    Element x = Element::scalar(1);
    for (std::size_t a = 0; a < s.k.size(); ++a) x = Y.mul(x, Y.t_plus_coeff(s.k[a], s.l[a], s.n[a]));
    return x;
}

VacuumState act_by_conjugation(DoubleYangian& Y, int i, int j, int r, const ProductState& s) {
    const int N = Y.N();
    const int p = static_cast<int>(s.k.size());
    const int m = p + 1;
    if (r < 1) throw UsageError("act_by_conjugation needs r >= 1");
    std::vector<std::string> names{"z"};
    for (int a = 1; a <= p; ++a) names.push_back("v" + std::to_string(a));
    VarOrder order(names);
    const int K = r;
    const Rational half = Y.level() / 2;

    // Univariate pieces: R-bar(x) = g(x)(1 - P/x), R-bar(x)^{-1} = g(x)^{-1}(1 - x^{-2})^{-1}(1 + P/x).
    TruncSeries g = g_at(N, 1, 0, K);
    TruncSeries inv = inverse_linear(1, 0, K);
    TruncSeries one = TruncSeries::constant(g.order(), 1);
    TruncSeries ginv_cross = series_invert(g * (one - inv * inv));

    SeriesOp id = SeriesOp::identity(N, m, TruncSeries::constant(order, 1));
    SeriesOp L = id, Rr = id;
    for (int a = 1; a <= p; ++a) {
        int hi = s.n[a - 1];
        TruncSeries fl = expand_difference(ginv_cross, order, 0, a, half, hi);
        TruncSeries il = expand_difference(inv, order, 0, a, half, hi);
        L = L * (id + permutation_op<TruncSeries>(N, m, 1, a + 1, il)).scaled(fl);
    }
    for (int a = p; a >= 1; --a) {
        int hi = s.n[a - 1];
        TruncSeries fr = expand_difference(g, order, 0, a, -half, hi);
        TruncSeries ir = expand_difference(inv, order, 0, a, -half, hi);
        Rr = Rr * (id - permutation_op<TruncSeries>(N, m, 1, a + 1, ir)).scaled(fr);
    }

    MultiIndex row{i - 1}, col{j - 1};
    for (int a = 0; a < p; ++a) {
        row.push_back(s.k[a] - 1);
        col.push_back(s.l[a] - 1);
    }
    std::uint64_t rk = id.pack(row), ck = id.pack(col);

    std::map<std::vector<int>, VacuumState> mcache;
    auto mcoef = [&](const MultiIndex& K1, const MultiIndex& L1, const std::vector<int>& beta) {
        std::vector<int> key = K1;
        key.insert(key.end(), L1.begin(), L1.end());
        key.insert(key.end(), beta.begin(), beta.end());
        auto it = mcache.find(key);
        if (it != mcache.end()) return it->second;
        ProductState ps;
        for (int a = 0; a < p; ++a) {
            ps.k.push_back(K1[a + 1] + 1);
            ps.l.push_back(L1[a + 1] + 1);
        }
        ps.n = beta;
        VacuumState v = product_state(Y, ps);
        mcache.emplace(key, v);
        return v;
    };

    VacuumState out;
    for (const auto& [lk, lv] : L.entries()) {
        if (lk.first != rk) continue;
        MultiIndex mid1 = L.unpack(lk.second);
        for (const auto& [rkey, rv] : Rr.entries()) {
            if (rkey.second != ck) continue;
            MultiIndex mid2 = Rr.unpack(rkey.first);
            if (mid1[0] != mid2[0]) continue;
            TruncSeries S = lv * rv;
            // sum over beta <= n of S[z^{-r} v^{n-beta}] * M[v^beta]
            std::vector<int> beta(p, 0);
            while (true) {
                Exps e(m, 0);
                e[0] = -r;
                for (int a = 0; a < p; ++a) e[a + 1] = s.n[a] - beta[a];
                if (!S.known(e)) throw TruncationError("conjugation: coefficient outside the z/v window");
                Rational c = S.coeff(e);
                if (c != 0) out.add_scaled(mcoef(mid1, mid2, beta), c);
                int a = 0;
                while (a < p && beta[a] == s.n[a]) beta[a++] = 0;
                if (a == p) break;
                ++beta[a];
            }
        }
    }
    return out;
}

Element weight_truncated(const PBWEngine& e, const Element& x, int w) {
    return x.filtered([&](const Monomial& m) { return e.weight(m) <= w; });
}

Element leading_part(const Element& x, int* deg) {
    std::optional<int> best;
    for (const auto& [m, c] : x.terms()) {
        int d = DoubleYangian::degree(m);
        if (!best || d > *best) best = d;
    }
    if (deg) *deg = best.value_or(0);
    if (!best) return {};
    int b = *best;
    return x.filtered([b](const Monomial& m) { return DoubleYangian::degree(m) == b; });
}

Element evaluation_hom(const DoubleYangian& Y, const Element& x, const Rational& a, LoopEngine& U) {
    if (Y.level() != 0) throw UsageError("evaluation homomorphism needs level 0");
    if (a == 0) throw UsageError("evaluation point must be nonzero");
    if (U.N() != Y.N()) throw UsageError("evaluation target has the wrong N");
    Element out;
    for (const auto& [m, c] : x.terms()) {
        Rational coef = c;
        std::vector<Gen> w;
        for (Gen g : m) {
            int r = DoubleYangian::gr(g);
            int e = r > 0 ? r - 1 : r;
            Rational ap = 1;
            for (int q = 0; q < std::abs(e); ++q) ap *= a;
            if (e >= 0)
                coef *= ap;
            else
                coef /= ap;
            w.push_back(LoopEngine::E(DoubleYangian::gi(g), DoubleYangian::gj(g), 0));
        }
        out.add_scaled(U.word(w), coef);
    }
    return out;
}

Element graded_image(const Element& x, LoopEngine& U) {
    Element out;
    for (const auto& [m, c] : x.terms()) {
        std::vector<Gen> w;
        for (Gen g : m) {
            int r = DoubleYangian::gr(g);
            w.push_back(LoopEngine::E(DoubleYangian::gi(g), DoubleYangian::gj(g), r > 0 ? r - 1 : r));
        }
        out.add_scaled(U.word(w), c);
    }
    return out;
}

}  // namespace ycl
