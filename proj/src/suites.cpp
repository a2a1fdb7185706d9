#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "ycl/center.hpp"
#include "ycl/cli.hpp"
#include "ycl/diffop.hpp"
#include "ycl/errors.hpp"
#include "ycl/qva.hpp"
#include "ycl/tensor.hpp"

namespace ycl {

namespace {

struct Outcome {
    CheckStatus status;
    std::string detail;
};

Outcome verdict(bool ok, const std::string& detail = "") {
    return {ok ? CheckStatus::Pass : CheckStatus::Fail, detail};
}

Outcome from_invariance(const InvarianceReport& r) {
    std::string d = std::to_string(r.checks) + " generator/coefficient pairs";
    return verdict(r.invariant, r.invariant ? d : r.witness);
}

Outcome from_axiom(const AxiomReport& r) {
    if (r.checks == 0) return {CheckStatus::SkippedTruncation, r.witness};
    return verdict(r.ok, r.ok ? std::to_string(r.checks) + " comparisons" : r.witness);
}

Outcome from_identity(const IdentityReport& r) {
    return verdict(r.ok, r.ok ? std::to_string(r.degrees_checked) + " degrees" : r.mismatch);
}

// A negative control passes when the underlying check fails.
Outcome control(bool detected, const std::string& what) {
    return verdict(detected, detected ? what + " detected" : what + " not detected");
}

class Runner {
public:
    Runner(Report& r, const std::vector<std::string>& select) : r_(r), select_(select) {}

    bool wanted(const std::string& name) const {
        if (select_.empty()) return true;
        for (const auto& p : select_)
            if (name.find(p) != std::string::npos) return true;
        return false;
    }

    void run(const std::string& name, const std::function<Outcome()>& f) {
        if (!wanted(name)) return;
        CheckResult c;
        c.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome o = f();
            c.status = o.status;
            c.detail = o.detail;
        } catch (const TruncationError& e) {
            c.status = CheckStatus::SkippedTruncation;
            c.detail = e.what();
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.detail = std::string("error: ") + e.what();
        }
        c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r_.checks.push_back(std::move(c));
    }

private:
    Report& r_;
    const std::vector<std::string>& select_;
};

Gen t(int i, int j, int r) { return DoubleYangian::t(i, j, r); }
Gen E(int i, int j, int r) { return LoopEngine::E(i, j, r); }

std::string lvl(const Rational& c) { return "c=" + to_string(c) + "/"; }

TruncSeries laurent_u(int lo, const std::map<int, Rational>& c) {
    return TruncSeries::univariate("u", Window{lo, 0, Trunc::Laurent}, c);
}

std::vector<StandardTableau> tableaux_of(const std::vector<YoungDiagram>& shapes) {
    std::vector<StandardTableau> out;
    for (const auto& mu : shapes)
        for (auto& U : standard_tableaux(mu)) out.push_back(U);
    return out;
}

std::vector<YoungDiagram> shapes_or_all(const SuiteConfig& cfg, int m_max, int N) {
    if (!cfg.shapes.empty()) return cfg.shapes;
    std::vector<YoungDiagram> out;
    for (int m = 1; m <= m_max; ++m)
        for (auto& mu : partitions(m, N)) out.push_back(mu);
    return out;
}

// ---- rmatrix ----

void suite_rmatrix(Runner& run, const SuiteConfig& cfg) {
    const int N = cfg.n_or(2), K = cfg.g_order.value_or(8);
    const TruncSeries g = compute_g(N, K);
    const TruncSeries one_minus_u2 = laurent_u(-K, {{0, 1}, {-2, -1}});
    run.run("g-series/recursion", [&] {
        return verdict(series_shift(g, "u", Rational(N)).equal_on_common(g * one_minus_u2));
    });
    run.run("g-series/product", [&] {
        TruncSeries prod = g;
        for (int a = 1; a < N; ++a) prod = prod * series_shift(g, "u", Rational(a));
        std::map<int, Rational> ones;
        for (int k = 0; k <= K; ++k) ones[-k] = 1;
        return verdict(prod.equal_on_common(laurent_u(-K, ones)));
    });
    run.run("g-series/unitarity", [&] {
        TruncSeries reflected(g.order(), g.windows());
        for (const auto& [e, c] : g.terms()) reflected.set(e, (e[0] % 2) ? Rational(-c) : c);
        return verdict((g * reflected * one_minus_u2).equal_on_common(TruncSeries::constant(g.order(), 1)));
    });
    run.run("g-series/leading-coefficients", [&]() -> Outcome {
        if (K < 3) return {CheckStatus::SkippedTruncation, "needs u^-1..u^-3, window ends at u^-" + std::to_string(K)};
        const Rational n(N);
        const Rational e1 = 1 / n, e2 = (n * n + 1) / (2 * n * n), e3 = (n * n * n * n + 4 * n * n + 1) / (6 * n * n * n);
        std::string got = to_string(g.coeff1(-1)) + ", " + to_string(g.coeff1(-2)) + ", " + to_string(g.coeff1(-3));
        return verdict(g.coeff1(-1) == e1 && g.coeff1(-2) == e2 && g.coeff1(-3) == e3, got);
    });

    VarOrder uv({"u", "v"});
    auto lin = [&](int cu, int cv) {
        TruncSeries s(uv, {Window{0, 1, Trunc::Exact}, Window{0, 1, Trunc::Exact}});
        s.set({1, 0}, cu);
        s.set({0, 1}, cv);
        return s;
    };
    // Numerators after clearing the common denominator u (u + v) v.
    const SeriesOp r12 = yang_r_numerator(N, 3, 1, 2, lin(1, 0)), r13 = yang_r_numerator(N, 3, 1, 3, lin(1, 1)),
                   r23 = yang_r_numerator(N, 3, 2, 3, lin(0, 1));
    run.run("ybe/bivariate", [&] { return verdict(series_op_equal(r12 * r13 * r23, r23 * r13 * r12)); });
    run.run("ybe/slices", [&] {
        for (Rational v : {Rational(1, 3), Rational(-2), Rational(5)}) {
            RatFuncOp a = yang_r(N, 3, 1, 2, 0) * yang_r(N, 3, 1, 3, v) * to_ratfunc_op(yang_r_at(N, 3, 2, 3, v));
            RatFuncOp b = to_ratfunc_op(yang_r_at(N, 3, 2, 3, v)) * yang_r(N, 3, 1, 3, v) * yang_r(N, 3, 1, 2, 0);
            if (!(a == b)) return verdict(false, "v = " + to_string(v));
        }
        return verdict(true);
    });
    if (N > 1)
        run.run("control/ybe-wrong-order", [&] {
            return control(!series_op_equal(r12 * r13 * r23, r12 * r23 * r13), "R12 R13 R23 != R12 R23 R13");
        });

    const SeriesOp plus = rbar(N, 2, 1, 2, 1, 0, K), minus = rbar(N, 2, 1, 2, -1, 0, K);
    run.run("rbar/unitarity", [&] { return verdict(series_op_is_identity(plus * minus)); });
    const SeriesOp inv = series_op_invert(plus, g_at(N, 1, 0, K));
    run.run("rbar/inverse", [&] {
        return verdict(series_op_is_identity(inv * plus) && series_op_is_identity(plus * inv));
    });
    run.run("rbar/crossing", [&] {
        SeriesOp shifted = rbar(N, 2, 1, 2, 1, Rational(N), K);
        return verdict(series_op_is_identity(partial_transpose(inv, 1) * partial_transpose(shifted, 1)) &&
                       series_op_is_identity(partial_transpose(inv, 2) * partial_transpose(shifted, 2)));
    });
    if (N > 1)
        run.run("control/crossing-wrong-shift", [&] {
            SeriesOp wrong = rbar(N, 2, 1, 2, 1, Rational(N + 1), K);
            return control(!series_op_is_identity(partial_transpose(inv, 1) * partial_transpose(wrong, 1)),
                           "crossing failure at shift N + 1");
        });
}

// ---- fusion ----

void suite_fusion(Runner& run, const SuiteConfig& cfg) {
    const int N = cfg.n_or(2), m_max = cfg.budget_or("m_max", 4);
    for (int m = 1; m <= m_max; ++m) {
        const std::string p = "m=" + std::to_string(m) + "/";
        std::vector<StandardTableau> tabs = tableaux_of(partitions(m, N));
        std::vector<RatOp> es;
        bool poles = true;
        std::string bad_pole;
        run.run(p + "poles-cancel", [&] {
            for (const auto& U : tabs) {
                FusionTrace tr;
                es.push_back(fusion_idempotent(U, N, &tr));
                if (!tr.negative_powers_cancelled && poles) {
                    poles = false;
                    bad_pole = U.str();
                }
            }
            return verdict(poles, poles ? std::to_string(tabs.size()) + " tableaux" : bad_pole);
        });
        if (es.size() != tabs.size()) continue;
        run.run(p + "idempotent", [&] {
            for (std::size_t a = 0; a < es.size(); ++a)
                if (!(es[a] * es[a] == es[a])) return verdict(false, tabs[a].str());
            return verdict(true);
        });
        run.run(p + "jucys-murphy-oracle", [&] {
            for (std::size_t a = 0; a < es.size(); ++a)
                if (!(es[a] == jm_oracle_idempotent(tabs[a], N))) return verdict(false, tabs[a].str());
            return verdict(true);
        });
        run.run(p + "orthogonal", [&] {
            for (std::size_t a = 0; a < es.size(); ++a)
                for (std::size_t b = 0; b < es.size(); ++b)
                    if (a != b && (es[a] * es[b]).nonzeros() != 0)
                        return verdict(false, tabs[a].str() + " x " + tabs[b].str());
            return verdict(true);
        });
        run.run(p + "completeness", [&] {
            RatOp total(N, m);
            for (const auto& e : es) total = total + e;
            return verdict(total == RatOp::identity(N, m, 1));
        });
    }
}

// ---- pbw ----

std::vector<Rational> levels_or(const SuiteConfig& cfg, std::vector<Rational> fallback) {
    if (cfg.level) return {*cfg.level};
    return fallback;
}

void suite_pbw(Runner& run, const SuiteConfig& cfg) {
    const int N = cfg.n_or(2);
    const int words = cfg.budget_or("words", 200), states = cfg.budget_or("states", 50);
    const int word_len = cfg.budget_or("word_length", 5), D = cfg.budget_or("cap", 7);
    const auto [ulo, uhi] = cfg.window_or("u", {-4, 4});
    for (const Rational& c : levels_or(cfg, {Rational(0), Rational(-2), Rational(1)})) {
        const std::string p = lvl(c);
        std::mt19937 rng(cfg.seed);
        std::uniform_int_distribution<int> idx(1, N), rr(1, 2), len(2, std::max(2, word_len));
        run.run(p + "diamond", [&] {
            DoubleYangian Y(N, c);
            Y.set_cap(D);
            for (int trial = 0; trial < words; ++trial) {
                const int n = len(rng);
                std::vector<Gen> w;
                for (int q = 0; q < n; ++q) {
                    const int r = rr(rng);
                    w.push_back(t(idx(rng), idx(rng), rng() % 2 ? -r : r));
                }
                const int split = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
                Element left = Y.mul(Y.word({w.begin(), w.begin() + split}), Y.word({w.begin() + split, w.end()}));
                const int exact = D - DoubleYangian::yangian_excess(w);
                if (!(weight_truncated(Y, left, exact) == weight_truncated(Y, Y.word(w), exact)))
                    return verdict(false, Y.str(Element::monomial(w)));
            }
            return verdict(true, std::to_string(words) + " words");
        });
        run.run(p + "graded-leading-terms", [&] {
            DoubleYangian Y(N, c);
            Y.set_cap(10);
            LoopEngine U(N, c);
            for (int i = 1; i <= N; ++i)
                for (int j = 1; j <= N; ++j)
                    for (int k = 1; k <= N; ++k)
                        for (int l = 1; l <= N; ++l)
                            for (int r = 1; r <= 3; ++r)
                                for (int s = 1; s <= 3; ++s) {
                                    Element br = Y.commutator(Element::monomial({t(i, j, r)}),
                                                              Element::monomial({t(k, l, -s)}));
                                    const int top = r - 1 - s;
                                    Element lead = br.filtered(
                                        [&](const Monomial& m) { return DoubleYangian::degree(m) >= top; });
                                    Element expect = U.commutator(Element::monomial({E(i, j, r - 1)}),
                                                                  Element::monomial({E(k, l, -s)}));
                                    if (!(graded_image(lead, U) == expect)) return verdict(false, Y.str(br));
                                }
            return verdict(true);
        });
        run.run(p + "cross-validation", [&]() -> Outcome {
            if (ulo > -1 || uhi < 0) return {CheckStatus::SkippedTruncation, "u window must contain [-1, 0]"};
            const int cap = cfg.budget_or("cap", 8);
            DoubleYangian Y(N, c);
            Y.set_cap(cap);
            std::uniform_int_distribution<int> legs(1, 2), pw(0, uhi), gr(1, -ulo);
            for (int trial = 0; trial < states; ++trial) {
                ProductState s;
                const int n = legs(rng);
                for (int a = 0; a < n; ++a) {
                    s.k.push_back(idx(rng));
                    s.l.push_back(idx(rng));
                    s.n.push_back(pw(rng));
                }
                const int i = idx(rng), j = idx(rng), r = gr(rng);
                // t^(r) lowers the exact weight by r - 1.
                const int exact = cap - r + 1;
                if (!(weight_truncated(Y, act_by_conjugation(Y, i, j, r, s), exact) ==
                      weight_truncated(Y, Y.act(t(i, j, r), product_state(Y, s)), exact)))
                    return verdict(false, "t_" + std::to_string(i) + std::to_string(j) + "^(" + std::to_string(r) +
                                              ") on trial " + std::to_string(trial));
            }
            return verdict(true, std::to_string(states) + " states");
        });
    }
}

// ---- critical-center ----

void suite_critical_center(Runner& run, const SuiteConfig& cfg) {
    const int N = cfg.n_or(2), D = cfg.budget_or("cap", 8), s_max = cfg.budget_or("s_max", 4);
    const int m_max = cfg.budget_or("m_max", 3);
    const int u_max = cfg.window_or("u", {-6, 6}).second;
    const Rational crit(-N), c = cfg.level_or(crit);
    const std::vector<StandardTableau> tabs = tableaux_of(shapes_or_all(cfg, m_max, N));

    if (c == crit) {
        DoubleYangian Y(N, c);
        Y.set_cap(D);
        for (const auto& U : tabs)
            run.run("invariance/immanant " + U.str(), [&] {
                return from_invariance(invariance(Y, quantum_immanant(Y, U), u_max, s_max, D, U.str()));
            });
        for (int m = 1; m <= m_max; ++m)
            run.run("invariance/trace-family m=" + std::to_string(m), [&] {
                return from_invariance(invariance(Y, trace_family(Y, m), u_max, s_max, D, "trace"));
            });
    }
    const Rational c0 = c == crit ? Rational(0) : c;
    run.run("control/noncritical-level " + to_string(c0), [&] {
        DoubleYangian Y(N, c0);
        Y.set_cap(D);
        int nonzero = 0;
        for (const auto& U : tabs) nonzero += invariance(Y, quantum_immanant(Y, U), u_max, s_max, D, U.str()).nonzero;
        return control(nonzero > 0, std::to_string(nonzero) + " non-annihilated coefficients");
    });

    const int k_max = cfg.budget_or("commute_u", 4);
    run.run("immanant-commutativity", [&] {
        DoubleYangian Y(N, c);
        Y.set_cap(cfg.budget_or("commute_cap", 7));
        std::vector<std::pair<std::string, Element>> coeffs;
        for (const auto& U : tabs) {
            UPoly p = quantum_immanant(Y, U);
            for (int k = 0; k <= k_max; ++k) coeffs.emplace_back(U.str() + " u^" + std::to_string(k), p.coeff(k));
        }
        int pairs = 0;
        for (std::size_t a = 0; a < coeffs.size(); ++a)
            for (std::size_t b = a + 1; b < coeffs.size(); ++b, ++pairs)
                if (!dual_commute(Y, coeffs[a].second, coeffs[b].second))
                    return verdict(false, coeffs[a].first + " vs " + coeffs[b].first);
        return verdict(true, std::to_string(pairs) + " pairs");
    });
    run.run("control/generators-do-not-commute", [&] {
        DoubleYangian Y(N, c);
        Y.set_cap(6);
        if (N < 2) return verdict(true, "gl_1 dual half is commutative");
        return control(!dual_commute(Y, Element::monomial({t(1, 2, -1)}), Element::monomial({t(2, 1, -1)})),
                       "[t_12^(-1), t_21^(-1)] != 0");
    });
}

// ---- noncritical-center ----

void suite_noncritical_center(Runner& run, const SuiteConfig& cfg) {
    const int N = cfg.n_or(2), D = cfg.budget_or("cap", 8), s_max = cfg.budget_or("s_max", 4);
    const int r_max = cfg.budget_or("r_max", 3);
    for (const Rational& c : levels_or(cfg, {Rational(0), Rational(1)})) {
        const std::string p = lvl(c);
        run.run(p + "qdet-centrality", [&] {
            DoubleYangian Y(N, c);
            Y.set_cap(cfg.budget_or("qdet_cap", 7));
            UPoly q = qdet_plus(Y);
            int checks = 0;
            for (int k = 0; k <= r_max; ++k) {
                InvarianceReport r = centrality(Y, q.coeff(k), 3);
                if (!r.invariant) return verdict(false, "u^" + std::to_string(k) + ": " + r.witness);
                checks += r.checks;
            }
            return verdict(true, std::to_string(checks) + " brackets");
        });
        DoubleYangian Y(N, c);
        Y.set_cap(D);
        LoopEngine U(N, c);
        std::vector<Element> d = noncritical_generators(Y, r_max);
        for (int r = 0; r <= r_max; ++r) {
            const std::string dr = "d_" + std::to_string(r);
            run.run(p + "invariance/" + dr, [&] { return from_invariance(invariance(Y, d[r], s_max, D, dr)); });
            run.run(p + "classical-limit/" + dr, [&] {
                Element expect;
                for (int i = 1; i <= N; ++i) expect += Element::monomial({E(i, i, -r - 1)});
                Element got = noncritical_classical_limit(Y, d[r], r, U);
                return verdict(got == expect, U.str(got));
            });
        }
    }
    run.run("control/single-generator-not-central", [&] {
        DoubleYangian Y(N, 0);
        Y.set_cap(6);
        return control(!centrality(Y, Element::monomial({t(1, 1, -1)}), 1).invariant, "non-central t_11^(-1)");
    });
    run.run("dual-structure/center", [&] {
        DoubleYangian Y(N, 0);
        Y.set_cap(7);
        std::vector<Element> states{Element::scalar(1), Element::monomial({t(1, N, -1)}),
                                    Element::monomial({t(N, 1, -1)}), Y.word({t(1, 1, -1), t(N, N, -2)})};
        return from_axiom(check_dual_center(Y, states));
    });
    run.run("dual-structure/noncommutative-witness", [&] {
        DoubleYangian Y(N, 0);
        Y.set_cap(7);
        if (N < 2) return verdict(false, "needs N >= 2");
        Element w = dual_noncommutativity_witness(Y);
        const Element a = Element::monomial({t(1, 2, -1)}), b = Element::monomial({t(2, 1, -1)});
        return verdict(!w.is_zero() && w == Y.mul(a, b) - Y.mul(b, a), Y.str(w));
    });
}

// ---- manin ----

void suite_manin(Runner& run, const SuiteConfig& cfg) {
    const int m_max = cfg.budget_or("m_max", 3), D = cfg.budget_or("cap", 5);
    std::vector<int> Ns = cfg.N ? std::vector<int>{*cfg.N} : std::vector<int>{1, 2};
    for (int N : Ns) {
        const std::string p = "N=" + std::to_string(N) + "/";
        DoubleYangian Y(N, cfg.level_or(Rational(-N)));
        Y.set_cap(D);
        OperatorAlgebra alg(Y, OpFlavor::Shift);
        const OpMatrix M = dual_yangian_matrix(Y);
        run.run(p + "dual-yangian/manin", [&] { return from_identity(manin_check(alg, M)); });
        run.run(p + "dual-yangian/newton", [&] { return from_identity(newton_check(alg, M, m_max)); });
        run.run(p + "dual-yangian/macmahon", [&] { return from_identity(macmahon_check(alg, M, m_max)); });
        LoopEngine U(N, -N);
        U.set_cap(D);
        OperatorAlgebra cl(U, OpFlavor::Derivation);
        const OpMatrix C = classical_matrix(U);
        run.run(p + "classical/manin", [&] { return from_identity(manin_check(cl, C)); });
        run.run(p + "classical/newton", [&] { return from_identity(newton_check(cl, C, m_max)); });
        run.run(p + "classical/macmahon", [&] { return from_identity(macmahon_check(cl, C, m_max)); });
        if (N < 2) continue;
        run.run(p + "control/no-shift", [&] {
            OpMatrix bare(N, std::vector<ShiftOperator>(N));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) bare[i][j] = ShiftOperator::coefficient(t_plus_poly(Y, i + 1, j + 1));
            return control(!manin_check(alg, bare).ok, "Manin failure of T+(u) alone");
        });
        run.run(p + "control/no-derivation", [&] {
            OpMatrix bare(N, std::vector<ShiftOperator>(N));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) bare[i][j] = ShiftOperator::coefficient(e_plus_poly(U, i + 1, j + 1));
            return control(!manin_check(cl, bare).ok, "Manin failure of E+(u) alone");
        });
    }
}

// ---- classical-ff ----

const char* kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Phi: return "phi";
        case FamilyKind::Psi: return "psi";
        case FamilyKind::Theta: return "theta";
    }
    return "?";
}

void suite_classical_ff(Runner& run, const SuiteConfig& cfg) {
    const int N = cfg.n_or(2), D = cfg.budget_or("cap", 6), m_max = cfg.budget_or("m_max", 2);
    const int r_max = cfg.budget_or("r_max", 3), s_max = cfg.budget_or("s_max", 2);
    const Rational c = cfg.level_or(Rational(-N));
    DoubleYangian Y(N, c);
    Y.set_cap(D);
    LoopEngine U(N, c);
    U.set_cap(D);
    for (FamilyKind kind : {FamilyKind::Phi, FamilyKind::Psi, FamilyKind::Theta})
        for (int m = 1; m <= m_max; ++m) {
            const std::string p = std::string(kind_name(kind)) + " m=" + std::to_string(m) + "/";
            FamilySeries f;
            run.run(p + "h-divisible", [&] {
                f = family_series(Y, kind, m);
                return verdict(f.divisible, "lowest h-power " + std::to_string(f.min_h_power));
            });
            run.run(p + "classical-limit", [&] {
                if (f.series.coeffs().empty()) return verdict(false, "family series not computed");
                UPoly lim = family_classical_limit(f, U), ff = ff_generator(U, kind, m);
                for (int j = 0; j <= f.exact_u; ++j)
                    if (!(lim.coeff(j) == ff.coeff(j))) return verdict(false, "u^" + std::to_string(j));
                return verdict(!ff.is_zero(), "u^0..u^" + std::to_string(f.exact_u));
            });
        }
    std::vector<Element> probe;
    for (int m = 1; m <= m_max; ++m) {
        UPoly phi = ff_generator(U, FamilyKind::Phi, m);
        for (int r = 0; r <= r_max; ++r) {
            probe.push_back(phi.coeff(r));
            const std::string name = "invariance/phi m=" + std::to_string(m) + " r=" + std::to_string(r);
            run.run(name, [&] { return from_invariance(affine_invariance(U, phi.coeff(r), s_max, name)); });
        }
    }
    run.run("linear-independence", [&] {
        const int rank = rank_of(probe);
        return verdict(rank == static_cast<int>(probe.size()),
                       "rank " + std::to_string(rank) + " of " + std::to_string(probe.size()));
    });
    run.run("control/partial-bracket-not-divisible", [&] {
        return control(h_graded(Y, trace_family(Y, 1).scaled(-1), 1).min_h_power() < 0, "negative h-power");
    });
    if (N > 1 && m_max >= 2)
        run.run("control/noncritical-phi2", [&] {
            LoopEngine U0(N, 0);
            U0.set_cap(D - 1);
            return control(!affine_invariance(U0, ff_generator(U0, FamilyKind::Phi, 2).coeff(0), s_max).invariant,
                           "non-invariance at K = 0");
        });
}

// ---- qva-axioms ----

Probe single_probe(int k, int l, int a) { return probe_of(ProductState{{k}, {l}, {a}}); }

Source single_source(int k, int l, int a) { return product_source(ProductState{{k}, {l}, {a}}); }

void suite_qva(Runner& run, const SuiteConfig& cfg) {
    const int N = cfg.n_or(2);
    const Rational c = cfg.level_or(Rational(-N));
    DoubleYangian Y(N, c);
    Y.set_cap(cfg.budget_or("cap", 8));
    VertexContext ctx;
    std::tie(ctx.z_lo, ctx.z_hi) = cfg.window_or("z", {-2, 2});
    ctx.h_order = cfg.window_or("h", {0, 2}).second;
    ctx.depth = cfg.budget_or("depth", ctx.depth);
    const int M = std::min(N, 2);  // second index of the probes

    run.run("v1", [&] {
        return from_axiom(check_v1(Y, {Element::scalar(1), Element::monomial({t(1, 1, -1)}),
                                       Y.word({t(1, M, -1), t(M, 1, -2)})}));
    });
    const std::vector<Probe> basket{single_probe(1, M, 0), single_probe(M, 1, 1),
                                    probe_of(ProductState{{1, M}, {M, 1}, {0, 0}})};
    run.run("v2", [&] {
        std::vector<Probe> ps = basket;
        ps.push_back(qdet_probe(N, 1));
        return from_axiom(check_v2(Y, ps, ctx));
    });
    run.run("d1", [&] { return from_axiom(check_d1(Y)); });
    for (const Probe& v : basket)
        for (const Probe& w : basket)
            run.run("d2/" + v.label + " | " + w.label, [&] { return from_axiom(check_d2(Y, v, w, ctx)); });

    const std::vector<Source> singles{single_source(1, M, 0), single_source(M, 1, 1), single_source(1, 1, 1),
                                      single_source(M, M, 0)};
    run.run("s0", [&] {
        AxiomReport all;
        for (const Source& P : singles)
            for (const Source& Q : singles) {
                AxiomReport r = check_s0(N, c, P, Q);
                all.checks += r.checks;
                if (!r.ok) all.fail(r.witness);
            }
        return from_axiom(all);
    });
    run.run("s3", [&] {
        AxiomReport all;
        for (const Source& P : singles)
            for (const Source& Q : singles) {
                AxiomReport r = check_s3(N, c, P, Q, ctx.h_order);
                all.checks += r.checks;
                if (!r.ok) all.fail(r.witness);
            }
        return from_axiom(all);
    });
    run.run("s2", [&] {
        AxiomReport all;
        for (const auto& tri : std::vector<std::vector<Source>>{{singles[0], singles[1], singles[2]},
                                                               {singles[1], singles[3], singles[0]}}) {
            AxiomReport r = check_s2(N, c, tri[0], tri[1], tri[2], ctx.h_order, 1);
            all.checks += r.checks;
            if (!r.ok) all.fail(r.witness);
        }
        return from_axiom(all);
    });

    const Probe q0 = qdet_probe(N, 0), q1 = qdet_probe(N, 1);
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> idx(1, N), pw(0, 1), legs(1, 2);
    const int trials = cfg.budget_or("probes", 2);
    for (int trial = 0; trial < trials; ++trial) {
        ProductState s;
        const int n = legs(rng);
        for (int a = 0; a < n; ++a) {
            s.k.push_back(idx(rng));
            s.l.push_back(idx(rng));
            s.n.push_back(pw(rng));
        }
        const Probe w = probe_of(s);
        run.run("sloc/" + w.label, [&] { return from_axiom(check_sloc(Y, q0, w, q0, ctx)); });
    }
    run.run("strong-associativity", [&] {
        AxiomReport all;
        for (const Probe& v : {single_probe(1, M, 0), single_probe(M, 1, 1), q1}) {
            AxiomReport r = check_strong_associativity(Y, v, q0, q0, ctx);
            all.checks += r.checks;
            if (!r.ok) all.fail(v.label + ": " + r.witness);
        }
        return from_axiom(all);
    });
    run.run("center-closure", [&] {
        AxiomReport all;
        for (const auto& [v, u] : std::vector<std::pair<Probe, Probe>>{{q0, q1}, {q1, q0}}) {
            AxiomReport r = check_center_closure(Y, v, u, 3, ctx);
            all.checks += r.checks;
            if (!r.ok) all.fail(r.witness);
        }
        return from_axiom(all);
    });
    if (N > 1) {
        VertexContext wide = ctx;
        wide.z_lo = std::min(ctx.z_lo, -3);
        wide.z_hi = std::max(ctx.z_hi, 3);
        run.run("control/sloc-noncentral-v", [&] {
            AxiomReport r = check_sloc(Y, single_probe(2, 1, 1), single_probe(1, 2, 0), q0, wide);
            return control(!r.ok, "S-locality failure");
        });
        run.run("control/associativity-noncentral-u", [&] {
            AxiomReport r = check_strong_associativity(Y, single_probe(1, 2, 0), q0, single_probe(2, 1, 1), ctx);
            return control(!r.ok, "associativity failure");
        });
        run.run("control/closure-noncentral", [&] {
            return control(!check_center_closure(Y, single_probe(1, 2, 0), q0, 3, ctx).ok, "closure failure");
        });
    }
}

using SuiteFn = void (*)(Runner&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s{
        {"rmatrix", suite_rmatrix},
        {"fusion", suite_fusion},
        {"pbw", suite_pbw},
        {"critical-center", suite_critical_center},
        {"noncritical-center", suite_noncritical_center},
        {"manin", suite_manin},
        {"classical-ff", suite_classical_ff},
        {"qva-axioms", suite_qva},
    };
    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suites()) n.push_back(name);
        return n;
    }();
    return names;
}

std::vector<Report> run_suite(const std::string& name, const SuiteConfig& cfg) {
    validate(cfg);
    std::vector<Report> out;
    for (const auto& [n, fn] : suites()) {
        if (name != "all" && name != n) continue;
        Report r;
        r.suite = n;
        r.config = cfg;
        Runner run(r, cfg.select);
        fn(run, cfg);
        out.push_back(std::move(r));
    }
    if (out.empty()) throw ConfigError("unknown suite '" + name + "'");
    return out;
}

}  // namespace ycl
