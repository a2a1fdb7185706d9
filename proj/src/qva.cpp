#include "ycl/qva.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace ycl {

namespace {

Gen t(int i, int j, int r) { return DoubleYangian::t(i, j, r); }

int cap_of(const DoubleYangian& Y) { return Y.cap().value_or(DoubleYangian::kDefaultCap); }

int weight_of(const DoubleYangian& Y, const Monomial& m) { return static_cast<const PBWEngine&>(Y).weight(m); }

int min_weight(const DoubleYangian& Y, const Element& x) {
    int w = INT_MAX;
    for (const auto& [m, c] : x.terms()) w = std::min(w, weight_of(Y, m));
    return w;
}

Rational rpow(const Rational& a, int n) {
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= a;
    return r;
}

Rational binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return Rational(binomial(n, k));
}

int families(const Source& s) { return static_cast<int>(s.power.size()); }

void zadd(ZSeries& acc, const ZSeries& s, const Rational& c) {
    for (const auto& [e, z] : s) {
        auto it = acc.find(e);
        if (it == acc.end()) {
            acc[e] = ZCoeff{z.x.scaled(c), z.exact};
            continue;
        }
        it->second.x.add_scaled(z.x, c);
        it->second.exact = std::min(it->second.exact, z.exact);
    }
}

}  // namespace

int Source::degree() const { return std::accumulate(power.begin(), power.end(), 0); }

bool Source::operator<(const Source& o) const {
    return std::tie(k, l, var, shift, power) < std::tie(o.k, o.l, o.var, o.shift, o.power);
}

bool Source::operator==(const Source& o) const {
    return k == o.k && l == o.l && var == o.var && shift == o.shift && power == o.power;
}

Source product_source(const ProductState& s) {
    Source r;
    r.k = s.k;
    r.l = s.l;
    r.power = s.n;
    r.var.resize(s.k.size());
    std::iota(r.var.begin(), r.var.end(), 0);
    r.shift.assign(s.k.size(), Rational(0));
    return r;
}

std::string source_label(const Source& s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t f = 0; f < s.power.size(); ++f) os << (f ? "," : "") << "u" << f << "^" << s.power[f];
    os << "]";
    for (int a = 0; a < s.legs(); ++a) {
        os << " t+" << s.k[a] << s.l[a] << "(u" << s.var[a];
        if (s.shift[a] != 0) os << (s.shift[a] > 0 ? "+" : "") << to_string(s.shift[a]);
        os << ")";
    }
    return os.str();
}

Element source_state(DoubleYangian& Y, const Source& s) {
    const int D = cap_of(Y);
    const int F = families(s);
    std::map<Exps, Element> cur;
    cur[Exps(F, 0)] = Element::scalar(1);
    for (int a = s.legs() - 1; a >= 0; --a) {
        const int f = s.var[a];
        const Rational& sh = s.shift[a];
        std::map<Exps, Element> next;
        for (const auto& [e, x] : cur) {
            if (s.k[a] == s.l[a]) next[e] += x;
            const int room = s.power[f] - e[f];
            const int w0 = min_weight(Y, x);
            for (int r = 1; !x.is_zero() && w0 + r <= D; ++r) {
                Element gx;
                bool computed = false;
                for (int i = 0; i <= std::min(r - 1, room); ++i) {
                    const int rest = r - 1 - i;
                    if (sh == 0 && rest != 0) continue;
                    Rational coef = -binom(r - 1, i) * rpow(sh, rest);
                    if (!computed) {
                        gx = Y.act(t(s.k[a], s.l[a], -r), x);
                        computed = true;
                    }
                    if (gx.is_zero()) break;
                    Exps e2 = e;
                    e2[f] += i;
                    next[e2].add_scaled(gx, coef);
                }
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(Exps(s.power.begin(), s.power.end()));
    return it == cur.end() ? Element() : it->second;
}

Element source_state(DoubleYangian& Y, const SourceSum& s) {
    Element r;
    for (const auto& [src, c] : s) r.add_scaled(source_state(Y, src), c);
    return r;
}

SourceSum decompose(DoubleYangian& Y, const Element& state) {
    SourceSum out;
    Element x = state;
    while (!x.is_zero()) {
        const Monomial* pick = nullptr;
        for (const auto& [m, c] : x.terms())
            if (!pick || m.size() > pick->size()) pick = &m;
        Monomial M = *pick;
        Rational c = x.coeff(M);
        ProductState ps;
        for (Gen g : M) {
            if (!DoubleYangian::is_dual(g)) throw UsageError("decompose expects a vacuum-module state");
            ps.k.push_back(DoubleYangian::gi(g));
            ps.l.push_back(DoubleYangian::gj(g));
            ps.n.push_back(-DoubleYangian::gr(g) - 1);
        }
        Source src = product_source(ps);
        Element st = source_state(Y, src);
        Rational lead = st.coeff(M);
        if (lead == 0) throw UsageError("decompose: product source lost its leading monomial");
        Rational coef = c / lead;
        out.push_back({src, coef});
        x.add_scaled(st, -coef);
    }
    return out;
}

SourceSum qdet_source(int N, int a) {
    SourceSum out;
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) inv += perm[i] > perm[j];
        Source s;
        for (int i = 0; i < N; ++i) {
            s.k.push_back(perm[i] + 1);
            s.l.push_back(i + 1);
            s.var.push_back(0);
            s.shift.push_back(Rational(-i));
        }
        s.power = {a};
        out.push_back({s, Rational(inv % 2 ? -1 : 1)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Probe probe_of(const ProductState& s, const std::string& label) {
    Probe p;
    p.src = {{product_source(s), Rational(1)}};
    p.degree = std::accumulate(s.n.begin(), s.n.end(), 0);
    p.label = label.empty() ? source_label(p.src[0].first) : label;
    return p;
}

Probe qdet_probe(int N, int a) {
    Probe p;
    p.src = qdet_source(N, a);
    p.degree = a;
    p.label = "qdet[u^" + std::to_string(a) + "]";
    return p;
}

namespace {

// (multi-index K so far, exponents (z, u_0, ...)) -> state
using LegMap = std::map<std::pair<std::vector<int>, Exps>, Element>;

LegMap t_plus_stage(DoubleYangian& Y, const Source& src, LegMap cur, int z_max) {
    const int D = cap_of(Y);
    for (int a = src.legs() - 1; a >= 0; --a) {
        const int f = src.var[a];
        const Rational& sh = src.shift[a];
        LegMap next;
        for (const auto& [key, s] : cur) {
            const auto& [K, e] = key;
            const int kk = src.k[a], KK = K[a] + 1;
            const int room = src.power[f] - e[f + 1];
            const int zroom = z_max - e[0];
            // z- and u-powers only grow from here on.
            if (room < 0 || zroom < 0) continue;
            if (kk == KK) next[key] += s;
            const int w0 = min_weight(Y, s);
            for (int r = 1; !s.is_zero() && w0 + r <= D; ++r) {
                if (sh == 0 && r - 1 > static_cast<long long>(zroom) + room) break;
                Element gs;
                bool computed = false;
                for (int q = 0; q <= std::min(r - 1, zroom); ++q)
                    for (int i = 0; i <= std::min(r - 1 - q, room); ++i) {
                        const int rest = r - 1 - q - i;
                        if (sh == 0 && rest != 0) continue;
                        Rational coef = -binom(r - 1, q) * binom(r - 1 - q, i) * rpow(sh, rest);
                        if (!computed) {
                            gs = Y.act(t(kk, KK, -r), s);
                            computed = true;
                        }
                        if (gs.is_zero()) continue;
                        Exps e2 = e;
                        e2[0] += q;
                        e2[f + 1] += i;
                        next[{K, e2}].add_scaled(gs, coef);
                    }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

ZSeries collect(const Source& src, const LegMap& m, int z_lo, int z_hi, const std::function<int(int)>& exact) {
    ZSeries out;
    for (int b = z_lo; b <= z_hi; ++b) out[Exps{b}] = ZCoeff{Element(), exact(b)};
    for (const auto& [key, s] : m) {
        const Exps& e = key.second;
        bool hit = true;
        for (int f = 0; f < families(src); ++f) hit &= (e[f + 1] == src.power[f]);
        if (!hit) continue;
        if (e[0] < z_lo || e[0] > z_hi) continue;
        out[Exps{e[0]}].x += s;
    }
    return out;
}

}  // namespace

namespace {

// T_n(u|z + c/2)^{-1} w; only l, var, shift and power of src are used.
LegMap inverse_stage(DoubleYangian& Y, const Source& src, const Element& w, int depth) {
    const int N = Y.N();
    const int F = families(src);
    const Rational half_c = Y.level() / 2;
    LegMap cur;
    cur[{{}, Exps(F + 1, 0)}] = w;
    for (int a = 0; a < src.legs(); ++a) {
        const int f = src.var[a];
        const Rational sigma = src.shift[a] + half_c;
        LegMap next;
        for (const auto& [key, s] : cur) {
            const auto& [K, e] = key;
            const int rem = depth + e[0];
            std::vector<UPoly> col = t_inverse_column(Y, src.l[a] - 1, s, rem);
            for (int k = 0; k < N; ++k) {
                std::vector<int> K2 = K;
                K2.push_back(k);
                for (const auto& [pneg, x] : col[k].coeffs()) {
                    const int p = -pneg;
                    if (p == 0) {
                        next[{K2, e}] += x;
                        continue;
                    }
                    // x^{-p} at x = z + u_f + sigma: sum_j C(-p, j) (u_f + sigma)^j z^{-p-j}
                    const int room = src.power[f] - e[f + 1];
                    for (int j = 0; p + j <= rem; ++j) {
                        Rational bj = binomial(Rational(-p), j);
                        for (int i = 0; i <= std::min(j, room); ++i) {
                            if (sigma == 0 && i != j) continue;
                            Rational coef = bj * binom(j, i) * rpow(sigma, j - i);
                            if (coef == 0) continue;
                            Exps e2 = e;
                            e2[0] -= p + j;
                            e2[f + 1] += i;
                            next[{K2, e2}].add_scaled(x, coef);
                        }
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

ZSeries finish_vertex(DoubleYangian& Y, const Source& src, LegMap cur, int w_exact, int depth, int z_max) {
    const int D = cap_of(Y);
    z_max = std::min(z_max, D);
    cur = t_plus_stage(Y, src, std::move(cur), z_max);
    const int E = std::min(w_exact, D);
    return collect(src, cur, -depth, z_max,
                   [&](int b) { return std::min({D, E + std::min(0, b + 1), b + depth}); });
}

}  // namespace

ZSeries vertex_Y(DoubleYangian& Y, const Source& src, const Element& w, int w_exact, int depth, int z_max) {
    return finish_vertex(Y, src, inverse_stage(Y, src, w, depth), w_exact, depth, z_max);
}

ZSeries vertex_Y(DoubleYangian& Y, const SourceSum& src, const Element& w, int w_exact, int depth, int z_max) {
    // Sources with equal column indices, families and shifts share the inverse stage.
    std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<Rational>>, Source> groups;
    for (const auto& [s, c] : src) {
        auto [it, fresh] = groups.try_emplace({s.l, s.var, s.shift}, s);
        if (fresh) continue;
        std::vector<int>& pw = it->second.power;
        if (pw.size() != s.power.size()) throw UsageError("vertex_Y: inconsistent family counts");
        for (std::size_t f = 0; f < pw.size(); ++f) pw[f] = std::max(pw[f], s.power[f]);
    }
    std::map<Source, LegMap> stage;
    for (const auto& [key, g] : groups) stage.emplace(g, inverse_stage(Y, g, w, depth));
    ZSeries out;
    for (const auto& [s, c] : src)
        zadd(out, finish_vertex(Y, s, stage.at(groups.at({s.l, s.var, s.shift})), w_exact, depth, z_max), c);
    return out;
}

ZSeries vertex_Y_dual(DoubleYangian& Y, const SourceSum& src, const Element& w) {
    const int D = cap_of(Y);
    ZSeries out;
    for (const auto& [s, c] : src) {
        LegMap cur;
        std::vector<int> K;
        for (int a = 0; a < s.legs(); ++a) K.push_back(s.l[a] - 1);
        cur[{K, Exps(families(s) + 1, 0)}] = w;
        cur = t_plus_stage(Y, s, std::move(cur), INT_MAX);
        zadd(out, collect(s, cur, 0, D, [&](int) { return D; }), c);
    }
    return out;
}

Element translation_D(DoubleYangian& Y, const Element& state) {
    Element out;
    for (const auto& [m, c] : state.terms())
        for (std::size_t l = 0; l < m.size(); ++l) {
            Gen g = m[l];
            if (!DoubleYangian::is_dual(g)) throw UsageError("translation_D expects a vacuum-module state");
            const int r = -DoubleYangian::gr(g);
            std::vector<Gen> w(m.begin(), m.end());
            w[l] = t(DoubleYangian::gi(g), DoubleYangian::gj(g), -(r + 1));
            out.add_scaled(Y.word(w), c * r);
        }
    return out;
}

HSer HSer::one(int h_max, int z_vars) {
    HSer r(h_max);
    r.add(Exps(z_vars + 1, 0), 1);
    return r;
}

void HSer::add(const Exps& e, const Rational& c) {
    if (c == 0 || e[0] > H_) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
        c_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) c_.erase(it);
}

HSer HSer::operator+(const HSer& o) const {
    HSer r(std::min(H_, o.H_));
    for (const auto& [e, c] : c_) r.add(e, c);
    for (const auto& [e, c] : o.c_) r.add(e, c);
    return r;
}

HSer HSer::operator-(const HSer& o) const { return *this + o.scaled(-1); }

HSer HSer::operator*(const HSer& o) const {
    HSer r(std::min(H_, o.H_));
    for (const auto& [e, c] : c_)
        for (const auto& [f, d] : o.c_) {
            if (e.size() != f.size()) throw UsageError("HSer: variable count mismatch");
            if (e[0] + f[0] > r.H_) continue;
            Exps g(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) g[i] = e[i] + f[i];
            r.add(g, c * d);
        }
    return r;
}

HSer HSer::scaled(const Rational& c) const {
    HSer r(H_);
    for (const auto& [e, x] : c_) r.add(e, x * c);
    return r;
}

std::string HSer::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        os << (first ? "" : " + ") << to_string(c) << "*h^" << e[0];
        for (std::size_t i = 1; i < e.size(); ++i) os << "*z" << i << "^" << e[i];
        first = false;
    }
    return first ? "0" : os.str();
}

namespace {

struct SVars {
    VarOrder order;
    std::vector<Window> win;
    int K = 0;
    std::size_t u0 = 1, v0 = 1;
};

SVars s_vars(const SLayout& left, const SLayout& right, int K) {
    if (left.power.empty() || right.power.empty()) throw UsageError("S-map layouts need at least one family");
    SVars sv;
    std::vector<std::string> names{"z"};
    sv.win.push_back(Window{-K, 0, Trunc::Laurent});
    for (std::size_t f = 0; f < left.power.size(); ++f) {
        names.push_back("u" + std::to_string(f));
        sv.win.push_back(Window{0, left.power[f], Trunc::Taylor});
    }
    for (std::size_t f = 0; f < right.power.size(); ++f) {
        names.push_back("v" + std::to_string(f));
        sv.win.push_back(Window{0, right.power[f], Trunc::Taylor});
    }
    sv.order = VarOrder(names);
    sv.K = K;
    sv.v0 = 1 + left.power.size();
    return sv;
}

// f(z + y_a - y_b + s) for f = sum_{n <= 0} f_n x^n.
TruncSeries lift(const SVars& sv, const std::map<int, Rational>& f, std::size_t a, std::size_t b,
                 const Rational& s) {
    TruncSeries r(sv.order, sv.win);
    const int pa = sv.win[a].hi, pb = sv.win[b].hi;
    Exps e(sv.order.size(), 0);
    for (const auto& [n, c] : f)
        for (int k = 0; n - k >= -sv.K; ++k) {
            const Rational ck = c * binomial(Rational(n), k);
            for (int i = 0; i <= std::min(k, pa); ++i)
                for (int j = 0; i + j <= k && j <= pb; ++j) {
                    Rational x = ck * binom(k, i) * binom(k - i, j) * rpow(s, k - i - j);
                    if (x == 0) continue;
                    if (j % 2) x = -x;
                    std::fill(e.begin(), e.end(), 0);
                    e[0] = n - k;
                    e[a] = i;
                    e[b] = j;
                    r.add_to(e, x);
                }
        }
    return r;
}

// R-bar_{nm}(u|v|z + zshift) on the n + m matrix legs.
SeriesOp rbar_nm(int N, const SLayout& left, const SLayout& right, const SVars& sv, const Rational& zshift) {
    const int n = static_cast<int>(left.var.size()), m = static_cast<int>(right.var.size());
    const TruncSeries one = TruncSeries::constant(sv.order, 1);
    std::map<int, Rational> g;
    const TruncSeries gser = compute_g(N, sv.K);
    for (const auto& [e, c] : gser.terms()) g[e[0]] = c;
    SeriesOp F = SeriesOp::identity(N, n + m, one);
    for (int j = 0; j < n; ++j)
        for (int i = m - 1; i >= 0; --i) {
            const std::size_t a = sv.u0 + left.var[j], b = sv.v0 + right.var[i];
            const Rational s = left.shift[j] - right.shift[i] + zshift;
            const TruncSeries gs = lift(sv, g, a, b, s);
            const TruncSeries inv = lift(sv, {{-1, Rational(1)}}, a, b, s);
            SeriesOp P = permutation_op<TruncSeries>(N, n + m, j + 1, n + i + 1, one);
            F = F * (SeriesOp::identity(N, n + m, one) - P.scaled(inv)).scaled(gs);
        }
    return F;
}

std::vector<int> leg_range(int from, int count) {
    std::vector<int> r(count);
    std::iota(r.begin(), r.end(), from);
    return r;
}

SeriesOp transposed_legs(SeriesOp F, int from, int count) {
    for (int q = from; q < from + count; ++q) F = partial_transpose(F, q);
    return F;
}

// Ordered products on vec(X): row legs 1..L, column legs L+1..2L; n legs in the first group.
SeriesOp super_ll(const SeriesOp& F) { return leg_embed(F, leg_range(1, F.legs()), 2 * F.legs()); }

SeriesOp super_rr(const SeriesOp& F) {
    const int L = F.legs();
    return leg_embed(transposed_legs(F, 1, L), leg_range(L + 1, L), 2 * L);
}

SeriesOp super_lr(const SeriesOp& F, int n) {
    const int L = F.legs();
    std::vector<int> legs = leg_range(1, n);
    for (int q : leg_range(L + n + 1, L - n)) legs.push_back(q);
    return leg_embed(transposed_legs(F, n + 1, L - n), legs, 2 * L);
}

SeriesOp super_rl(const SeriesOp& F, int n) {
    const int L = F.legs();
    std::vector<int> legs = leg_range(L + 1, n);
    for (int q : leg_range(n + 1, L - n)) legs.push_back(q);
    return leg_embed(transposed_legs(F, 1, n), legs, 2 * L);
}

using SRow = std::map<std::uint64_t, TruncSeries>;

SRow row_times(const SRow& r, const SeriesOp& M) {
    SRow out;
    for (const auto& [key, v] : M.entries()) {
        auto it = r.find(key.first);
        if (it == r.end()) continue;
        TruncSeries x = it->second * v;
        auto jt = out.find(key.second);
        if (jt == out.end())
            out.emplace(key.second, std::move(x));
        else
            jt->second = jt->second + x;
    }
    return out;
}

SRow row_add(SRow a, const SRow& b) {
    for (const auto& [k, v] : b) {
        auto it = a.find(k);
        if (it == a.end())
            a.emplace(k, v);
        else
            it->second = it->second + v;
    }
    return a;
}

// e_alpha^T M^{-1} for M = 1 - (strictly z-negative part).
SRow row_inverse(std::uint64_t alpha, const SeriesOp& M, const TruncSeries& one) {
    const SeriesOp Yn = SeriesOp::identity(M.N(), M.legs(), one) - M;
    SRow sum{{alpha, one}}, pw = sum;
    for (int k = 0; k < 10000; ++k) {
        pw = row_times(pw, Yn);
        bool empty = true;
        for (const auto& [c, v] : pw) empty &= v.terms().empty();
        if (empty) return sum;
        sum = row_add(std::move(sum), pw);
    }
    throw SingularSeriesError("row Neumann series did not terminate");
}

struct SPieces {
    SVars sv;
    SeriesOp F_minus, F0, F_plus_inv;
};

SPieces s_pieces(int N, const Rational& c, const SLayout& left, const SLayout& right, int K) {
    SPieces p{s_vars(left, right, K), {}, {}, {}};
    const TruncSeries one = TruncSeries::constant(p.sv.order, 1);
    p.F_minus = rbar_nm(N, left, right, p.sv, -c);
    p.F0 = rbar_nm(N, left, right, p.sv, Rational(0));
    p.F_plus_inv = series_op_invert(rbar_nm(N, left, right, p.sv, c), one);
    return p;
}

// G whose rl-product on F is 1: invert with the second leg group transposed.
SeriesOp rl_inverse(const SeriesOp& F, int n, const TruncSeries& one) {
    const int L = F.legs();
    return transposed_legs(series_op_invert(transposed_legs(F, n + 1, L - n), one), n + 1, L - n);
}

SLayout layout_of(const Source& s) { return SLayout{s.var, s.shift, s.power}; }

std::uint64_t s_row_index(int N, const Source& P, const Source& Q) {
    std::uint64_t a = 0;
    auto push = [&](const std::vector<int>& idx) {
        for (int x : idx) a = a * N + (x - 1);
    };
    push(P.k);
    push(Q.k);
    push(P.l);
    push(Q.l);
    return a;
}

std::vector<STerm> row_to_terms(int N, const SVars& sv, const SRow& row, const Source& P, const Source& Q,
                                int h_max) {
    const int n = P.legs(), m = Q.legs(), L = n + m;
    std::map<std::pair<Source, Source>, HSer> acc;
    for (const auto& [beta, ser] : row) {
        std::vector<int> digits(2 * L);
        std::uint64_t b = beta;
        for (int q = 2 * L - 1; q >= 0; --q) {
            digits[q] = static_cast<int>(b % N) + 1;
            b /= N;
        }
        Source P2 = P, Q2 = Q;
        for (int a = 0; a < n; ++a) {
            P2.k[a] = digits[a];
            P2.l[a] = digits[L + a];
        }
        for (int a = 0; a < m; ++a) {
            Q2.k[a] = digits[n + a];
            Q2.l[a] = digits[L + n + a];
        }
        for (const auto& [e, x] : ser.terms()) {
            int k = -e[0];
            for (std::size_t f = 0; f < P.power.size(); ++f) {
                P2.power[f] = P.power[f] - e[sv.u0 + f];
                k -= e[sv.u0 + f];
            }
            for (std::size_t f = 0; f < Q.power.size(); ++f) {
                Q2.power[f] = Q.power[f] - e[sv.v0 + f];
                k -= e[sv.v0 + f];
            }
            if (k < 0) throw UsageError("S-map produced a negative h-power");
            if (k > h_max) continue;
            auto it = acc.try_emplace({P2, Q2}, HSer(h_max)).first;
            it->second.add(Exps{k, e[0]}, x);
        }
    }
    std::vector<STerm> out;
    for (auto& [pq, f] : acc)
        if (!f.is_zero()) out.push_back(STerm{pq.first, pq.second, std::move(f)});
    return out;
}

int s_depth(const Source& P, const Source& Q, int h_max) { return h_max + P.degree() + Q.degree() + 1; }

}  // namespace

SeriesOp s_operator(int N, const Rational& c, const SLayout& left, const SLayout& right, int K) {
    SPieces p = s_pieces(N, c, left, right, K);
    const int n = static_cast<int>(left.var.size());
    const TruncSeries one = TruncSeries::constant(p.sv.order, 1);
    return super_lr(rl_inverse(p.F_minus, n, one), n) * super_ll(p.F0) * super_rr(p.F0) *
           super_rl(p.F_plus_inv, n);
}

std::vector<STerm> s_map(int N, const Rational& c, const Source& P, const Source& Q, int h_max) {
    SPieces p = s_pieces(N, c, layout_of(P), layout_of(Q), s_depth(P, Q, h_max));
    const int n = P.legs();
    const TruncSeries one = TruncSeries::constant(p.sv.order, 1);
    SRow row = row_inverse(s_row_index(N, P, Q), super_lr(p.F_minus, n), one);
    row = row_times(row, super_ll(p.F0));
    row = row_times(row, super_rr(p.F0));
    row = row_times(row, super_rl(p.F_plus_inv, n));
    return row_to_terms(N, p.sv, row, P, Q, h_max);
}

std::vector<STerm> s_map_inverse_form(int N, const Rational& c, const Source& P, const Source& Q, int h_max) {
    const SLayout left = layout_of(P), right = layout_of(Q);
    const int K = s_depth(P, Q, h_max);
    SeriesOp O = s_operator(N, c, left, right, K);
    SRow row;
    const std::uint64_t alpha = s_row_index(N, P, Q);
    for (const auto& [key, v] : O.entries())
        if (key.first == alpha) row.emplace(key.second, v);
    return row_to_terms(N, s_vars(left, right, K), row, P, Q, h_max);
}

namespace {

Element vacuum() { return Element::scalar(1); }

// Coefficient at z^b, or an unknown one (exact = -1) outside the computed range.
ZCoeff zat(const ZSeries& s, int b) {
    auto it = s.find(Exps{b});
    return it == s.end() ? ZCoeff{Element(), -1} : it->second;
}

std::string zlabel(const std::string& what, int b) { return what + " at z^" + std::to_string(b); }

std::string zlabel2(const std::string& what, int b1, int b2) {
    return what + " at z1^" + std::to_string(b1) + " z2^" + std::to_string(b2);
}

// a and b agree on monomials of weight <= bound; counts a comparison only if bound >= 0.
bool agree(const DoubleYangian& Y, const Element& a, const Element& b, int bound, AxiomReport& r,
           const std::string& where) {
    if (bound < 0) return true;
    ++r.checks;
    Element d = weight_truncated(Y, a - b, bound);
    if (d.is_zero()) return true;
    r.fail(where + ": difference " + Y.str(d));
    return false;
}

Source vacuum_source() { return Source{}; }

}  // namespace

AxiomReport check_v1(DoubleYangian& Y, const std::vector<Element>& states) {
    AxiomReport r;
    const int D = cap_of(Y);
    for (const Element& x : states) {
        ZSeries s = vertex_Y(Y, vacuum_source(), x, D, D);
        for (const auto& [e, zc] : s)
            agree(Y, zc.x, e[0] == 0 ? x : Element(), zc.exact, r, zlabel("Y(vac,z)" + Y.str(x), e[0]));
    }
    return r;
}

AxiomReport check_v2(DoubleYangian& Y, const std::vector<Probe>& probes, const VertexContext& ctx) {
    AxiomReport r;
    const int D = cap_of(Y);
    for (const Probe& p : probes) {
        const Element v = source_state(Y, p.src);
        ZSeries s = vertex_Y(Y, p.src, vacuum(), D, ctx.depth, ctx.z_hi);
        // Y(v, z) vac = e^{zD} v
        Element expect = v;
        Rational fact = 1;
        for (int b = -ctx.depth; b <= ctx.z_hi; ++b) {
            ZCoeff zc = zat(s, b);
            if (b < 0) {
                agree(Y, zc.x, Element(), zc.exact, r, zlabel("Y(" + p.label + ",z)vac", b));
                continue;
            }
            if (b > 0) {
                expect = translation_D(Y, expect);
                fact *= b;
            }
            agree(Y, zc.x, expect.scaled(1 / fact), zc.exact, r, zlabel("Y(" + p.label + ",z)vac", b));
        }
    }
    return r;
}

AxiomReport check_d1(DoubleYangian& Y) {
    AxiomReport r;
    ++r.checks;
    Element d = translation_D(Y, vacuum());
    if (!d.is_zero()) r.fail("D vac = " + Y.str(d));
    for (int i = 1; i <= Y.N(); ++i)
        for (int j = 1; j <= Y.N(); ++j) {
            ++r.checks;
            Element x = translation_D(Y, Element::monomial({t(i, j, -1)}));
            if (!(x == Element::monomial({t(i, j, -2)}))) r.fail("D t^(-1) vac = " + Y.str(x));
        }
    return r;
}

AxiomReport check_d2(DoubleYangian& Y, const Probe& v, const Probe& w, const VertexContext& ctx) {
    AxiomReport r;
    const int D = cap_of(Y);
    const int A = v.degree + w.degree;
    const int depth = std::max(ctx.depth, ctx.h_order + A + 2);
    const Element ws = source_state(Y, w.src);
    const ZSeries Y1 = vertex_Y(Y, v.src, ws, D, depth, ctx.z_hi + 1);
    const ZSeries Y2 = vertex_Y(Y, v.src, translation_D(Y, ws), D, depth, ctx.z_hi);
    for (int b = ctx.z_lo; b <= ctx.z_hi; ++b) {
        const ZCoeff hi = zat(Y1, b + 1), lo = zat(Y1, b), sh = zat(Y2, b);
        const int bound = std::min({hi.exact, lo.exact + 1, sh.exact, D});
        const int need = ctx.h_order + A + b + 1;
        const std::string where = zlabel("d2 for " + v.label + " on " + w.label, b);
        if (bound < need) r.fail(where + ": exact only to weight " + std::to_string(bound));
        agree(Y, hi.x.scaled(b + 1), translation_D(Y, lo.x) - sh.x, bound, r, where);
    }
    return r;
}

namespace {

using SCache = std::map<std::pair<Source, Source>, std::vector<STerm>>;

const std::vector<STerm>& cached_s(SCache& cache, int N, const Rational& c, const Source& P, const Source& Q,
                                   int h_max) {
    auto it = cache.find({P, Q});
    if (it == cache.end()) it = cache.emplace(std::make_pair(P, Q), s_map(N, c, P, Q, h_max)).first;
    return it->second;
}

HSer z_negated(const HSer& f) {
    HSer r(f.h_max());
    for (const auto& [e, c] : f.terms()) r.add(e, e[1] % 2 ? -c : c);
    return r;
}

}  // namespace

AxiomReport check_s0(int N, const Rational& c, const Source& P, const Source& Q) {
    AxiomReport r;
    ++r.checks;
    std::vector<STerm> terms = s_map(N, c, P, Q, 0);
    const HSer one = HSer::one(0);
    bool ok = terms.size() == 1 && terms[0].left == P && terms[0].right == Q && (terms[0].f - one).is_zero();
    if (!ok) {
        std::ostringstream os;
        os << "S(z)(" << source_label(P) << " x " << source_label(Q) << ") at h^0 has " << terms.size() << " terms";
        r.fail(os.str());
    }
    return r;
}

AxiomReport check_s3(int N, const Rational& c, const Source& P, const Source& Q, int h_max) {
    AxiomReport r;
    SCache cache;
    std::map<std::pair<Source, Source>, HSer> total;
    for (const STerm& a : cached_s(cache, N, c, P, Q, h_max)) {
        const HSer fa = z_negated(a.f);
        for (const STerm& b : cached_s(cache, N, c, a.right, a.left, h_max)) {
            auto it = total.try_emplace({b.right, b.left}, HSer(h_max)).first;
            it->second = it->second + fa * b.f;
        }
    }
    const HSer one = HSer::one(h_max);
    total.try_emplace({P, Q}, HSer(h_max));
    for (const auto& [pq, f] : total) {
        ++r.checks;
        HSer d = (pq.first == P && pq.second == Q) ? f - one : f;
        if (!d.is_zero())
            r.fail("S21(z)S(-z) on " + source_label(pq.first) + " x " + source_label(pq.second) + ": " + d.str());
    }
    return r;
}

namespace {

using Triple = std::tuple<Source, Source, Source>;
using TMap = std::map<Triple, HSer>;

enum class Pair { p12, p13, p23 };

// h^k z^b placed on z1, on z2, or expanded (z1 + z2)^b = sum_j C(b, j) z1^{b-j} z2^j with j <= z2_cap.
HSer place(const HSer& f, Pair p, int z2_cap) {
    HSer r(f.h_max());
    for (const auto& [e, c] : f.terms()) {
        const int k = e[0], b = e[1];
        if (p == Pair::p12) r.add(Exps{k, b, 0}, c);
        if (p == Pair::p23) r.add(Exps{k, 0, b}, c);
        if (p == Pair::p13)
            for (int j = 0; j <= z2_cap; ++j) r.add(Exps{k, b - j, j}, c * binomial(Rational(b), j));
    }
    return r;
}

TMap apply_s(const TMap& in, Pair p, SCache& cache, int N, const Rational& c, int h_max, int z2_cap) {
    TMap out;
    for (const auto& [tr, f] : in) {
        const auto& [A, B, C] = tr;
        const Source& x = p == Pair::p23 ? B : A;
        const Source& y = p == Pair::p12 ? B : C;
        for (const STerm& s : cached_s(cache, N, c, x, y, h_max)) {
            Triple t2 = tr;
            if (p == Pair::p12) t2 = {s.left, s.right, C};
            if (p == Pair::p13) t2 = {s.left, B, s.right};
            if (p == Pair::p23) t2 = {A, s.left, s.right};
            auto it = out.try_emplace(t2, HSer(h_max)).first;
            it->second = it->second + f * place(s.f, p, z2_cap);
        }
    }
    return out;
}

}  // namespace

AxiomReport check_s2(int N, const Rational& c, const Source& P, const Source& Q, const Source& R, int h_max,
                     int z2_max) {
    AxiomReport r;
    SCache cache;
    const int cap = z2_max + h_max + P.degree() + Q.degree() + R.degree();
    const HSer one = HSer::one(h_max, 2);
    TMap start{{Triple{P, Q, R}, one}};
    TMap lhs = apply_s(apply_s(apply_s(start, Pair::p23, cache, N, c, h_max, cap), Pair::p13, cache, N, c, h_max,
                               cap),
                       Pair::p12, cache, N, c, h_max, cap);
    TMap rhs = apply_s(apply_s(apply_s(start, Pair::p12, cache, N, c, h_max, cap), Pair::p13, cache, N, c, h_max,
                               cap),
                       Pair::p23, cache, N, c, h_max, cap);
    for (const auto& [tr, f] : rhs) lhs.try_emplace(tr, HSer(h_max));
    for (const auto& [tr, f] : lhs) {
        auto it = rhs.find(tr);
        HSer d = it == rhs.end() ? f : f - it->second;
        ++r.checks;
        for (const auto& [e, x] : d.terms())
            if (e[2] <= z2_max) {
                r.fail("Yang-Baxter on " + source_label(std::get<0>(tr)) + " x " + source_label(std::get<1>(tr)) +
                       " x " + source_label(std::get<2>(tr)) + ": " + d.str());
                break;
            }
    }
    return r;
}

AxiomReport check_sloc(DoubleYangian& Y, const Probe& v, const Probe& w, const Probe& u, const VertexContext& ctx) {
    AxiomReport r;
    const int N = Y.N(), D = cap_of(Y), H = ctx.h_order;
    const int A = v.degree + w.degree + u.degree;
    const Element us = source_state(Y, u.src);

    // Right side: Y(w, z2) Y(v, z1) u.
    std::map<std::pair<int, int>, ZCoeff> rhs;
    const ZSeries yv = vertex_Y(Y, v.src, us, D, ctx.depth, ctx.z_hi);
    for (int b1 = ctx.z_lo; b1 <= ctx.z_hi; ++b1) {
        const ZCoeff c1 = zat(yv, b1);
        const ZSeries yw = vertex_Y(Y, w.src, c1.x, c1.exact, ctx.depth, ctx.z_hi);
        for (int b2 = ctx.z_lo; b2 <= ctx.z_hi; ++b2) rhs[{b1, b2}] = zat(yw, b2);
    }

    // Left side: sum_t f_t(z1 - z2) Y(P_t, z1) Y(Q_t, z2) u at h = 1, (z1 - z2)^b Taylor in z2.
    std::map<Source, ZSeries> yq_cache;
    std::map<Source, std::map<std::pair<int, int>, ZCoeff>> grouped;  // P' -> (d, b2) -> state
    for (const auto& [P, cp] : v.src)
        for (const auto& [Q, cq] : w.src)
            for (const STerm& st : s_map(N, Y.level(), P, Q, H)) {
                auto qt = yq_cache.find(st.right);
                if (qt == yq_cache.end()) qt = yq_cache.emplace(st.right, vertex_Y(Y, st.right, us, D, ctx.depth, ctx.z_hi)).first;
                std::map<int, Rational> f1;
                for (const auto& [e, x] : st.f.terms()) f1[e[1]] += x;
                auto& g = grouped[st.left];
                for (const auto& [e2, zc] : qt->second) {
                    const int c2 = e2[0];
                    if (c2 > ctx.z_hi) continue;
                    for (const auto& [b, x] : f1)
                        for (int j = 0; c2 + j <= ctx.z_hi; ++j) {
                            if (c2 + j < ctx.z_lo) continue;
                            Rational coef = cp * cq * x * binomial(Rational(b), j);
                            if (j % 2) coef = -coef;
                            auto it = g.find({b - j, c2 + j});
                            if (it == g.end()) {
                                g[{b - j, c2 + j}] = ZCoeff{zc.x.scaled(coef), zc.exact};
                                continue;
                            }
                            it->second.x.add_scaled(zc.x, coef);
                            it->second.exact = std::min(it->second.exact, zc.exact);
                        }
                }
            }
    std::map<std::pair<int, int>, ZCoeff> lhs;
    for (int b1 = ctx.z_lo; b1 <= ctx.z_hi; ++b1)
        for (int b2 = ctx.z_lo; b2 <= ctx.z_hi; ++b2) lhs[{b1, b2}] = ZCoeff{Element(), D};
    for (const auto& [P, g] : grouped)
        for (const auto& [db2, zc] : g) {
            const auto [d, b2] = db2;
            if (zc.x.is_zero() && zc.exact >= D) continue;
            const ZSeries yp = vertex_Y(Y, P, zc.x, zc.exact, ctx.depth, ctx.z_hi - d);
            for (int b1 = ctx.z_lo; b1 <= ctx.z_hi; ++b1) {
                const ZCoeff c = zat(yp, b1 - d);
                ZCoeff& acc = lhs[{b1, b2}];
                acc.x += c.x;
                acc.exact = std::min(acc.exact, c.exact);
            }
        }

    for (const auto& [bb, L] : lhs) {
        const ZCoeff& R = rhs[bb];
        const int bound = std::min({L.exact, R.exact, H + A + bb.first + bb.second});
        agree(Y, L.x, R.x, bound, r, zlabel2("S-commutativity " + v.label + "," + w.label + "," + u.label, bb.first,
                                                bb.second));
    }
    if (r.checks == 0) r.fail("S-commutativity: no comparison within the exact window");
    return r;
}

AxiomReport check_strong_associativity(DoubleYangian& Y, const Probe& v, const Probe& w, const Probe& u,
                                       const VertexContext& ctx) {
    AxiomReport r;
    const int D = cap_of(Y);
    const Element ws = source_state(Y, w.src), us = source_state(Y, u.src);
    const std::string what = "associativity " + v.label + "," + w.label + "," + u.label;

    // Left: Y(v, z0 + z2) Y(w, z2) u, (z0 + z2)^p Taylor in z2.
    std::map<std::pair<int, int>, ZCoeff> lhs;
    for (int b0 = ctx.z_lo; b0 <= ctx.z_hi; ++b0)
        for (int b2 = ctx.z_lo; b2 <= ctx.z_hi; ++b2) lhs[{b0, b2}] = ZCoeff{Element(), D};
    const ZSeries yw = vertex_Y(Y, w.src, us, D, ctx.depth, ctx.z_hi);
    for (const auto& [e2, c2] : yw) {
        if (e2[0] > ctx.z_hi) continue;
        if (e2[0] < 0) {
            // w, u central: no negative powers.
            agree(Y, c2.x, Element(), c2.exact, r, zlabel(what + ": Y(w,z2)u", e2[0]));
            continue;
        }
        const ZSeries yv = vertex_Y(Y, v.src, c2.x, c2.exact, ctx.depth, 2 * ctx.z_hi);
        for (int b0 = ctx.z_lo; b0 <= ctx.z_hi; ++b0)
            for (int b2 = std::max(ctx.z_lo, e2[0]); b2 <= ctx.z_hi; ++b2) {
                const int j = b2 - e2[0], p = b0 + j;
                const ZCoeff c = zat(yv, p);
                ZCoeff& acc = lhs[{b0, b2}];
                acc.x.add_scaled(c.x, binomial(Rational(p), j));
                acc.exact = std::min(acc.exact, c.exact);
            }
    }

    // Right: Y(Y(v, z0) w, z2) u through an exact rewriting of each z0-coefficient.
    const ZSeries y0 = vertex_Y(Y, v.src, ws, D, ctx.depth, ctx.z_hi);
    for (int b0 = ctx.z_lo; b0 <= ctx.z_hi; ++b0) {
        const ZCoeff c0 = zat(y0, b0);
        const ZSeries y2 = vertex_Y(Y, decompose(Y, c0.x), us, D, ctx.depth, ctx.z_hi);
        for (int b2 = ctx.z_lo; b2 <= ctx.z_hi; ++b2) {
            const ZCoeff c = zat(y2, b2);
            const ZCoeff& L = lhs[{b0, b2}];
            const int bound = std::min({L.exact, c.exact, c0.exact + u.degree + b2});
            agree(Y, L.x, c.x, bound, r, zlabel2(what, b0, b2));
        }
    }
    if (r.checks == 0) r.fail(what + ": no comparison within the exact window");
    return r;
}

AxiomReport check_center_closure(DoubleYangian& Y, const Probe& v, const Probe& u, int s_max,
                                 const VertexContext& ctx) {
    AxiomReport r;
    const int D = cap_of(Y);
    const ZSeries s = vertex_Y(Y, v.src, source_state(Y, u.src), D, ctx.depth, ctx.z_hi);
    for (int b = ctx.z_lo; b <= ctx.z_hi; ++b) {
        const ZCoeff c = zat(s, b);
        const std::string where = zlabel(v.label + " product with " + u.label, b);
        if (b < 0) {
            agree(Y, c.x, Element(), c.exact, r, where);
            continue;
        }
        InvarianceReport inv = invariance(Y, c.x, s_max, c.exact, where);
        r.checks += inv.checks;
        if (!inv.invariant) r.fail(where + ": " + inv.witness);
    }
    return r;
}

Element center_product(DoubleYangian& Y, const Element& w, const Element& u, bool verify, int s_max) {
    const int D = cap_of(Y);
    if (verify)
        for (const Element* x : {&w, &u}) {
            InvarianceReport inv = invariance(Y, *x, s_max, D);
            if (!inv.invariant) throw UsageError("center_product: argument is not central: " + inv.witness);
        }
    return zat(vertex_Y(Y, decompose(Y, w), u, D, D, 0), 0).x;
}

AxiomReport check_dual_center(DoubleYangian& Y, const std::vector<Element>& states) {
    AxiomReport r;
    for (const Element& a : states) {
        const SourceSum src = decompose(Y, a);
        for (const Element& b : states) {
            const ZSeries s = vertex_Y_dual(Y, src, b);
            ++r.checks;
            for (const auto& [e, zc] : s)
                if (e[0] < 0 && !zc.x.is_zero()) r.fail(zlabel("dual Y(" + Y.str(a) + ")" + Y.str(b), e[0]));
            agree(Y, zat(s, 0).x, Y.mul(a, b), cap_of(Y), r, "dual (-1)-product " + Y.str(a) + " * " + Y.str(b));
        }
    }
    return r;
}

Element dual_noncommutativity_witness(DoubleYangian& Y) {
    if (Y.N() < 2) throw UsageError("the dual center is commutative for N = 1");
    const Element a = Element::monomial({t(1, 2, -1)}), b = Element::monomial({t(2, 1, -1)});
    auto prod = [&](const Element& x, const Element& y) { return zat(vertex_Y_dual(Y, decompose(Y, x), y), 0).x; };
    return prod(a, b) - prod(b, a);
}

}  // namespace ycl
