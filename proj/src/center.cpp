#include "ycl/center.hpp"

#include <algorithm>
#include <numeric>

namespace ycl {

namespace {

Gen t(int i, int j, int r) { return DoubleYangian::t(i, j, r); }

OpMatrix t_plus_matrix(const DoubleYangian& Y, const Rational& shift, int power) {
    const int N = Y.N();
    OpMatrix M(N, std::vector<ShiftOperator>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            M[i][j] = ShiftOperator::coefficient(OperatorAlgebra::shifted(t_plus_poly(Y, i + 1, j + 1), shift), power);
    return M;
}

int sign_of(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
    return inv % 2 ? -1 : 1;
}

Rational binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return Rational(binomial(n, k));
}

std::string gen_label(const DoubleYangian& Y, Gen g) { return Y.name(g); }

}  // namespace

UPoly shifted_trace(DoubleYangian& Y, const RatOp& E, const std::vector<Rational>& shifts) {
    if (static_cast<int>(shifts.size()) != E.legs()) throw UsageError("shifted_trace: one shift per leg");
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    std::vector<OpMatrix> legs;
    for (const Rational& s : shifts) legs.push_back(t_plus_matrix(Y, s, 0));
    return tensor_trace(alg, E, legs).coeff(0);
}

UPoly quantum_immanant(DoubleYangian& Y, const StandardTableau& U) {
    if (U.shape().length() > Y.N()) throw UsageError("quantum_immanant: shape longer than N");
    std::vector<Rational> shifts;
    for (int c : U.contents()) shifts.emplace_back(c);
    return shifted_trace(Y, fusion_idempotent(U, Y.N()), shifts);
}

UPoly qdet_plus(DoubleYangian& Y) {
    const int N = Y.N();
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    std::vector<std::vector<UPoly>> col(N);  // col[a][i] = t+_{i,a}(u - a)
    for (int a = 0; a < N; ++a)
        for (int i = 0; i < N; ++i) col[a].push_back(OperatorAlgebra::shifted(t_plus_poly(Y, i + 1, a + 1), -a));
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    UPoly total;
    do {
        UPoly p = col[0][perm[0]];
        for (int a = 1; a < N; ++a) p = alg.mul(p, col[a][perm[a]]);
        total = total + p.scaled(sign_of(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

UPoly trace_family(DoubleYangian& Y, int m) {
    const int N = Y.N();
    if (m == 0) return UPoly::constant(Element::scalar(N));
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    std::vector<std::vector<UPoly>> P(N, std::vector<UPoly>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) P[i][j] = t_plus_poly(Y, i + 1, j + 1);
    for (int q = 1; q < m; ++q) {
        std::vector<std::vector<UPoly>> next(N, std::vector<UPoly>(N));
        for (int a = 0; a < N; ++a)
            for (int j = 0; j < N; ++j) {
                UPoly f = OperatorAlgebra::shifted(t_plus_poly(Y, a + 1, j + 1), -q);
                for (int i = 0; i < N; ++i) next[i][j] = next[i][j] + alg.mul(P[i][a], f);
            }
        P = std::move(next);
    }
    UPoly tr;
    for (int i = 0; i < N; ++i) tr = tr + P[i][i];
    return tr;
}

bool rmatdet_check(DoubleYangian& Y) {
    const int N = Y.N();
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    RatOp A = antisymmetrizer(N, N);
    UPoly qd = qdet_plus(Y);
    std::vector<std::vector<std::vector<UPoly>>> f(N);  // f[a][k][j] = t+_kj(u - a)
    for (int a = 0; a < N; ++a) {
        f[a].assign(N, std::vector<UPoly>(N));
        for (int k = 0; k < N; ++k)
            for (int j = 0; j < N; ++j) f[a][k][j] = OperatorAlgebra::shifted(t_plus_poly(Y, k + 1, j + 1), -a);
    }
    auto product = [&](const MultiIndex& K, const MultiIndex& J) {
        UPoly p = f[0][K[0]][J[0]];
        for (int a = 1; a < N; ++a) p = alg.mul(p, f[a][K[a]][J[a]]);
        return p;
    };
    const std::uint64_t dim = A.dim();
    std::map<std::pair<std::uint64_t, std::uint64_t>, UPoly> prod;
    for (std::uint64_t I = 0; I < dim; ++I)
        for (std::uint64_t J = 0; J < dim; ++J) {
            UPoly lhs;
            for (std::uint64_t K = 0; K < dim; ++K) {
                const Rational* a = A.find(I, K);
                if (!a) continue;
                auto key = std::make_pair(K, J);
                auto it = prod.find(key);
                if (it == prod.end()) it = prod.emplace(key, product(A.unpack(K), A.unpack(J))).first;
                lhs = lhs + it->second.scaled(*a);
            }
            const Rational* a = A.find(I, J);
            UPoly rhs = a ? qd.scaled(*a) : UPoly();
            if (!(lhs == rhs)) return false;
        }
    return true;
}

ShiftOperator onemtd_direct(DoubleYangian& Y, int m) {
    const int N = Y.N();
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    OpMatrix M = t_plus_matrix(Y, 0, 1);
    OpMatrix one_minus(N, std::vector<ShiftOperator>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            one_minus[i][j] = M[i][j].scaled(-1);
            if (i == j) one_minus[i][j] = one_minus[i][j] + ShiftOperator::scalar(1);
        }
    return tensor_trace(alg, antisymmetrizer(m, N), std::vector<OpMatrix>(m, one_minus));
}

ShiftOperator onemtd_resummed(DoubleYangian& Y, int m) {
    const int N = Y.N();
    ShiftOperator total;
    for (int k = 0; k <= m; ++k) {
        std::vector<Rational> shifts;
        for (int a = 0; a < k; ++a) shifts.emplace_back(-a);
        UPoly tr = shifted_trace(Y, antisymmetrizer(k, N), shifts);
        Rational coef = binom(N - k, m - k) * (k % 2 ? -1 : 1);
        total = total + ShiftOperator::coefficient(tr, k).scaled(coef);
    }
    return total;
}

InvarianceReport invariance(DoubleYangian& Y, const Element& x, int s_max, int exact, const std::string& label) {
    InvarianceReport rep;
    const int N = Y.N();
    for (int s = 1; s <= s_max; ++s)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                Element y = weight_truncated(Y, Y.act(t(i, j, s), x), exact - s + 1);
                ++rep.checks;
                if (y.is_zero()) continue;
                ++rep.nonzero;
                if (rep.invariant) {
                    rep.invariant = false;
                    rep.witness = gen_label(Y, t(i, j, s)) + " on " + label + " gives " + Y.str(y).substr(0, 200);
                }
            }
    return rep;
}

InvarianceReport invariance(DoubleYangian& Y, const UPoly& series, int u_max, int s_max, int exact,
                            const std::string& label) {
    InvarianceReport rep;
    for (int k = 0; k <= u_max; ++k) {
        InvarianceReport r = invariance(Y, series.coeff(k), s_max, exact, label + " [u^" + std::to_string(k) + "]");
        rep.checks += r.checks;
        rep.nonzero += r.nonzero;
        if (rep.invariant && !r.invariant) {
            rep.invariant = false;
            rep.witness = r.witness;
        }
    }
    return rep;
}

bool dual_commute(DoubleYangian& Y, const Element& x, const Element& y) { return Y.commutator(x, y).is_zero(); }

InvarianceReport centrality(DoubleYangian& Y, const Element& x, int s_max) {
    if (!Y.cap()) throw UsageError("centrality needs a weight cap");
    const int D = *Y.cap();
    const int N = Y.N();
    InvarianceReport rep;
    for (int s = 1; s <= s_max; ++s)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int sign : {1, -1}) {
                    Element g = Element::monomial({t(i, j, sign * s)});
                    Element c = Y.commutator(g, x);
                    if (sign > 0) c = weight_truncated(Y, c, D - s + 1);
                    ++rep.checks;
                    if (c.is_zero()) continue;
                    ++rep.nonzero;
                    if (rep.invariant) {
                        rep.invariant = false;
                        rep.witness = "[" + gen_label(Y, t(i, j, sign * s)) + ", x] = " + Y.str(c).substr(0, 200);
                    }
                }
    return rep;
}

Element HSeries::coeff(int j, int n) const {
    auto it = c_.find({j, n});
    return it == c_.end() ? Element() : it->second;
}

void HSeries::add(int j, int n, const Element& x, const Rational& scale) {
    if (x.is_zero() || scale == 0) return;
    Element& slot = c_[{j, n}];
    slot.add_scaled(x, scale);
    if (slot.is_zero()) c_.erase({j, n});
}

int HSeries::min_h_power() const {
    int best = 0;
    bool first = true;
    for (const auto& [key, x] : c_) {
        if (first || key.second < best) best = key.second;
        first = false;
    }
    return best;
}

HSeries h_graded(const PBWEngine& Y, const UPoly& series, int prefactor) {
    HSeries out;
    for (const auto& [j, x] : series.coeffs())
        for (const auto& [m, a] : x.terms()) out.add(j, Y.weight(m) - j - prefactor, Element::monomial(m), a);
    return out;
}

FamilySeries family_series(DoubleYangian& Y, FamilyKind kind, int m) {
    const int N = Y.N();
    if (m < 1 || (kind == FamilyKind::Phi && m > N)) throw UsageError("family_series: m out of range");
    if (!Y.cap()) throw UsageError("family_series needs a weight cap");
    UPoly sum;
    for (int k = 0; k <= m; ++k) {
        Rational sign = k % 2 ? -1 : 1;
        std::vector<Rational> down, up;
        for (int a = 0; a < k; ++a) {
            down.emplace_back(-a);
            up.emplace_back(a - k + 1);
        }
        switch (kind) {
            case FamilyKind::Phi:
                sum = sum + shifted_trace(Y, antisymmetrizer(k, N), down).scaled(sign * binom(N - k, m - k));
                break;
            case FamilyKind::Psi:
                sum = sum + shifted_trace(Y, symmetrizer(k, N), up).scaled(sign * binom(N + m - 1, m - k));
                break;
            case FamilyKind::Theta:
                sum = sum + trace_family(Y, k).scaled(sign * binom(m, k));
                break;
        }
    }
    FamilySeries f;
    f.series = h_graded(Y, sum, m);
    f.min_h_power = f.series.min_h_power();
    f.divisible = f.min_h_power >= 0;
    f.exact_u = *Y.cap() - m;
    return f;
}

UPoly family_classical_limit(const FamilySeries& f, LoopEngine& U) {
    UPoly out;
    for (const auto& [key, x] : f.series.coeffs())
        if (key.second == 0) out.add(key.first, graded_image(x, U));
    return out;
}

UPoly ff_generator(LoopEngine& U, FamilyKind kind, int m) {
    OperatorAlgebra alg(U, OpFlavor::Derivation);
    OpMatrix M = classical_matrix(U);
    switch (kind) {
        case FamilyKind::Phi:
            return antisymmetrized_trace(alg, M, m).coeff(0);
        case FamilyKind::Psi:
            return symmetrized_trace(alg, M, m).coeff(0);
        case FamilyKind::Theta:
            return power_trace(alg, M, m).coeff(0);
    }
    return {};
}

Element classical_limit(const Element& x, LoopEngine& U) { return graded_image(leading_part(x), U); }

InvarianceReport affine_invariance(LoopEngine& U, const Element& x, int s_max, const std::string& label) {
    InvarianceReport rep;
    const int N = U.N();
    for (int s = 0; s <= s_max; ++s)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                Element y = U.act(LoopEngine::E(i, j, s), x);
                ++rep.checks;
                if (y.is_zero()) continue;
                ++rep.nonzero;
                if (rep.invariant) {
                    rep.invariant = false;
                    rep.witness = U.name(LoopEngine::E(i, j, s)) + " on " + label + " gives " + U.str(y).substr(0, 200);
                }
            }
    return rep;
}

int rank_of(const std::vector<Element>& xs) {
    // pivot monomial -> reduced row with coefficient 1 at the pivot
    std::map<Monomial, Element> pivots;
    for (const Element& x : xs) {
        Element r = x;
        for (const auto& [p, row] : pivots) {
            Rational c = r.coeff(p);
            if (c != 0) r.add_scaled(row, -c);
        }
        if (r.is_zero()) continue;
        const auto& [lead, lc] = *r.terms().begin();
        Monomial key = lead;
        Element row = r.scaled(1 / Rational(lc));
        for (auto& [p, other] : pivots) {
            Rational c = other.coeff(key);
            if (c != 0) other.add_scaled(row, -c);
        }
        pivots.emplace(key, row);
    }
    return static_cast<int>(pivots.size());
}

std::vector<Element> noncritical_generators(DoubleYangian& Y, int r_max) {
    UPoly q = qdet_plus(Y);
    std::vector<Element> d;
    for (int r = 0; r <= r_max; ++r) {
        Element x = q.coeff(r).scaled(-1);
        if (r == 0) x.add_term({}, 1);
        d.push_back(x);
    }
    return d;
}

Element noncritical_classical_limit(const DoubleYangian& Y, const Element& d, int r, LoopEngine& U) {
    // d_r carries h^{W - r - 1} on a monomial of weight W
    return graded_image(d.filtered([&](const Monomial& m) { return static_cast<const PBWEngine&>(Y).weight(m) == r + 1; }), U);
}

// Z_k = d_kl w - sum_a X_ka Z_a with X(x) = T(x) - 1.
std::vector<UPoly> t_inverse_column(DoubleYangian& Y, int l, const Element& w, int depth) {
    const int N = Y.N();
    // layer[n][k] = coefficient of x^{-n}
    std::vector<std::vector<Element>> layer(depth + 1, std::vector<Element>(N));
    layer[0][l] = w;
    for (int n = 1; n <= depth; ++n)
        for (int k = 0; k < N; ++k) {
            Element acc;
            for (int r = 1; r <= n; ++r)
                for (int a = 0; a < N; ++a) {
                    const Element& z = layer[n - r][a];
                    if (z.is_zero()) continue;
                    acc.add_scaled(Y.act(t(k + 1, a + 1, r), z), -1);
                }
            layer[n][k] = acc;
        }
    std::vector<UPoly> out(N);
    for (int n = 0; n <= depth; ++n)
        for (int k = 0; k < N; ++k) out[k].add(-n, layer[n][k]);
    return out;
}

namespace {

// f(u + a) with powers below -depth dropped; negative powers expand in u^{-1}.
UPoly expand_at(const UPoly& f, const Rational& a, int depth) {
    if (a == 0) {
        UPoly r;
        for (const auto& [n, x] : f.coeffs())
            if (n >= -depth) r.add(n, x);
        return r;
    }
    UPoly r;
    for (const auto& [n, x] : f.coeffs()) {
        if (n >= 0) {
            Rational ap = 1;
            for (int j = n; j >= 0; --j) {
                if (j >= -depth) r.add(j, x, Rational(binomial(static_cast<long>(n), static_cast<long>(j))) * ap);
                ap *= a;
            }
            continue;
        }
        // (u + a)^n = sum_k C(n, k) a^k u^{n-k}
        Rational ap = 1;
        for (int k = 0; n - k >= -depth; ++k) {
            r.add(n - k, x, binomial(Rational(n), k) * ap);
            ap *= a;
        }
    }
    return r;
}

UPoly act_on_series(DoubleYangian& Y, Gen g, const UPoly& w) {
    UPoly r;
    for (const auto& [p, x] : w.coeffs()) r.add(p, Y.act(g, x));
    return r;
}

// (T(u + a)^{-1})_{kl} w for all k, w a series in u with nonpositive powers.
std::vector<UPoly> t_inverse_apply(DoubleYangian& Y, int l, const UPoly& w, const Rational& a, int depth) {
    const int N = Y.N();
    std::vector<UPoly> out(N);
    for (const auto& [p, x] : w.coeffs()) {
        if (p < -depth) continue;
        std::vector<UPoly> z = t_inverse_column(Y, l, x, depth + p);
        for (int k = 0; k < N; ++k) {
            UPoly e = expand_at(z[k], a, depth + p);
            for (const auto& [n, y] : e.coeffs()) out[k].add(n + p, y);
        }
    }
    return out;
}

}  // namespace

UPoly ttilde_apply(DoubleYangian& Y, const StandardTableau& U, const Element& v, int depth) {
    const int N = Y.N();
    const int m = U.boxes();
    std::vector<int> c = U.contents();
    RatOp E = fusion_idempotent(U, N);
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    // W[(K, L)] = T^{-1}(x_m)_{k_m l_m} ... T^{-1}(x_1)_{k_1 l_1} v, keyed by packed multi-indices
    std::map<std::pair<MultiIndex, MultiIndex>, UPoly> W;
    W[{MultiIndex{}, MultiIndex{}}] = UPoly::constant(v);
    for (int a = 0; a < m; ++a) {
        Rational shift = Rational(c[a]) - Rational(N, 2);
        std::map<std::pair<MultiIndex, MultiIndex>, UPoly> next;
        for (const auto& [key, w] : W)
            for (int l = 0; l < N; ++l) {
                std::vector<UPoly> col = t_inverse_apply(Y, l, w, shift, depth);
                for (int k = 0; k < N; ++k) {
                    if (col[k].is_zero()) continue;
                    MultiIndex K = key.first, L = key.second;
                    K.push_back(k);
                    L.push_back(l);
                    next[{K, L}] = col[k];
                }
            }
        W = std::move(next);
    }
    std::vector<std::vector<std::vector<UPoly>>> f(m);  // f[a][j][k] = t+_jk(u + c_a)
    for (int a = 0; a < m; ++a) {
        f[a].assign(N, std::vector<UPoly>(N));
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) f[a][j][k] = OperatorAlgebra::shifted(t_plus_poly(Y, j + 1, k + 1), c[a]);
    }
    UPoly total;
    for (const auto& [key, e] : E.entries()) {
        MultiIndex L = E.unpack(key.first), J = E.unpack(key.second);
        for (const auto& [kl, w] : W) {
            if (kl.second != L) continue;
            const MultiIndex& K = kl.first;
            UPoly p = f[0][J[0]][K[0]];
            for (int a = 1; a < m; ++a) p = alg.mul(p, f[a][J[a]][K[a]]);
            total = total + alg.mul(p, w).scaled(e);
        }
    }
    UPoly out;
    for (const auto& [q, x] : total.coeffs())
        if (q >= -depth) out.add(q, x);
    return out;
}

UPoly qdet_ratio_apply(DoubleYangian& Y, const Element& v, int depth) {
    const int N = Y.N();
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    // qdet T(w) - 1 applied to a series, with w = u - N/2
    auto qdet_minus_one = [&](const UPoly& s) {
        std::vector<int> perm(N);
        std::iota(perm.begin(), perm.end(), 0);
        UPoly total;
        do {
            UPoly x = s;
            for (int a = N - 1; a >= 0; --a) {
                // t_{perm(a), a}(w - a) = d + sum_r t^(r) (u - N/2 - a)^{-r}
                Rational shift = -Rational(N, 2) - a;
                UPoly y = perm[a] == a ? x : UPoly();
                for (int r = 1; r <= depth; ++r) {
                    UPoly acted = act_on_series(Y, t(perm[a] + 1, a + 1, r), x);
                    if (acted.is_zero()) continue;
                    UPoly mono;
                    mono.add(-r, Element::scalar(1));
                    UPoly e = expand_at(mono, shift, depth);
                    for (const auto& [n, sc] : e.coeffs())
                        for (const auto& [p, st] : acted.coeffs())
                            if (n + p >= -depth) y.add(n + p, st, sc.constant());
                }
                x = y;
            }
            total = total + x.scaled(sign_of(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total - s;
    };
    // (1 + Q)^{-1} v = sum_k (-Q)^k v; each Q lowers the u-degree by at least one
    UPoly term = UPoly::constant(v), inv = term;
    for (int k = 1; k <= depth; ++k) {
        term = qdet_minus_one(term).scaled(-1);
        inv = inv + term;
    }
    UPoly full = alg.mul(qdet_plus(Y), inv), out;
    for (const auto& [q, x] : full.coeffs())
        if (q >= -depth) out.add(q, x);
    return out;
}

TildeReport ttilde_central_check(DoubleYangian& Y, const StandardTableau& U, const std::vector<Element>& basket,
                                 int q_min, int q_max, int z_max) {
    if (!Y.cap()) throw UsageError("ttilde_central_check needs a weight cap");
    if (Y.level() != -Y.N()) throw UsageError("ttilde_central_check runs at the critical level");
    const int D = *Y.cap();
    const int N = Y.N();
    const int depth = D - q_min;
    TildeReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.ok) rep.witness = what;
        rep.ok = false;
    };
    auto exact_at = [&](int q) { return D + std::min(0, q + 1); };

    UPoly onvac = ttilde_apply(Y, U, Element::scalar(1), depth);
    UPoly plain = quantum_immanant(Y, U);
    for (int q = q_min; q <= q_max; ++q) {
        ++rep.checks;
        Element d = weight_truncated(Y, onvac.coeff(q) - (q >= 0 ? plain.coeff(q) : Element()), exact_at(q));
        if (!d.is_zero()) fail("T~ vac differs from T+ vac at u^" + std::to_string(q));
    }
    for (std::size_t b = 0; b < basket.size(); ++b) {
        const Element& v = basket[b];
        UPoly tv = ttilde_apply(Y, U, v, depth);
        for (int r = 1; r <= z_max; ++r)
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    for (int sign : {1, -1}) {
                        Gen g = t(i, j, sign * r);
                        UPoly lhs = act_on_series(Y, g, tv);
                        UPoly rhs = ttilde_apply(Y, U, Y.act(g, v), depth);
                        for (int q = q_min; q <= q_max; ++q) {
                            int w = sign > 0 ? exact_at(q) - r + 1 : exact_at(q);
                            ++rep.checks;
                            Element d = weight_truncated(Y, lhs.coeff(q) - rhs.coeff(q), w);
                            if (!d.is_zero())
                                fail("[" + Y.name(g) + ", T~(u)] on basket state " + std::to_string(b) + " at u^" +
                                     std::to_string(q) + ": " + Y.str(d).substr(0, 200));
                        }
                    }
    }
    return rep;
}

}  // namespace ycl
