#include "doctest.h"
#include "ycl/center.hpp"

using namespace ycl;

namespace {

Gen t(int i, int j, int r) { return DoubleYangian::t(i, j, r); }
Gen E(int i, int j, int r) { return LoopEngine::E(i, j, r); }

std::vector<StandardTableau> tableaux_up_to(int m_max, int N) {
    std::vector<StandardTableau> out;
    for (int m = 1; m <= m_max; ++m)
        for (const auto& mu : partitions(m, N))
            for (auto& U : standard_tableaux(mu)) out.push_back(U);
    return out;
}

// Element of U(t^{-1}gl_N[t^{-1}]) truncated: u^j coefficients for j <= jmax.
UPoly upto(const UPoly& p, int jmax) {
    UPoly r;
    for (const auto& [j, x] : p.coeffs())
        if (j <= jmax) r.add(j, x);
    return r;
}

}  // namespace

TEST_CASE("immanant examples") {
    DoubleYangian Y1(1, -1);
    Y1.set_cap(6);
    CHECK(quantum_immanant(Y1, standard_tableaux(YoungDiagram({1}))[0]) == t_plus_poly(Y1, 1, 1));
    CHECK(qdet_plus(Y1) == t_plus_poly(Y1, 1, 1));

    DoubleYangian Y(2, -2);
    Y.set_cap(6);
    UPoly col = quantum_immanant(Y, standard_tableaux(YoungDiagram({1, 1}))[0]);
    CHECK(col == qdet_plus(Y));
    // qdet T+(u) = t+11(u) t+22(u-1) - t+21(u) t+12(u-1)
    OperatorAlgebra alg(Y, OpFlavor::Shift);
    UPoly direct = alg.mul(t_plus_poly(Y, 1, 1), OperatorAlgebra::shifted(t_plus_poly(Y, 2, 2), -1)) -
                   alg.mul(t_plus_poly(Y, 2, 1), OperatorAlgebra::shifted(t_plus_poly(Y, 1, 2), -1));
    CHECK(col == direct);
    CHECK(rmatdet_check(Y));
}

TEST_CASE("tableau independence and row/column specializations") {
    DoubleYangian Y(2, 0);
    Y.set_cap(7);
    for (int m = 1; m <= 3; ++m)
        for (const auto& mu : partitions(m, 2)) {
            auto tabs = standard_tableaux(mu);
            UPoly first = quantum_immanant(Y, tabs[0]);
            for (std::size_t q = 1; q < tabs.size(); ++q) {
                CAPTURE(tabs[q].str());
                CHECK(quantum_immanant(Y, tabs[q]) == first);
            }
            std::vector<Rational> up, down;
            for (int a = 0; a < m; ++a) {
                up.emplace_back(a);
                down.emplace_back(-a);
            }
            if (mu.length() == 1) CHECK(first == shifted_trace(Y, symmetrizer(m, 2), up));
            if (mu.parts()[0] == 1) CHECK(first == shifted_trace(Y, antisymmetrizer(m, 2), down));
        }
}

TEST_CASE("critical level: immanant coefficients are invariants") {
    const int D = 8;
    DoubleYangian crit(2, -2), zero(2, 0);
    crit.set_cap(D);
    zero.set_cap(D);
    int nonzero_at_zero = 0;
    for (const auto& U : tableaux_up_to(3, 2)) {
        CAPTURE(U.str());
        InvarianceReport r = invariance(crit, quantum_immanant(crit, U), 6, 4, D, U.str());
        CHECK_MESSAGE(r.invariant, r.witness);
        CHECK(r.checks == 7 * 16);
        nonzero_at_zero += invariance(zero, quantum_immanant(zero, U), 6, 4, D, U.str()).nonzero;
    }
    CHECK(nonzero_at_zero > 0);
}

TEST_CASE("critical level: trace family and qdet") {
    const int D = 8;
    DoubleYangian Y(2, -2);
    Y.set_cap(D);
    for (int m = 1; m <= 3; ++m) {
        InvarianceReport r = invariance(Y, trace_family(Y, m), 6, 4, D, "trace");
        CHECK_MESSAGE(r.invariant, r.witness);
    }
    DoubleYangian Y1(2, 1);
    Y1.set_cap(D);
    CHECK_FALSE(invariance(Y1, trace_family(Y1, 2), 4, 2, D).invariant);
}

TEST_CASE("qdet coefficients are central at every level") {
    for (Rational c : {Rational(-2), Rational(0), Rational(1)}) {
        DoubleYangian Y(2, c);
        Y.set_cap(7);
        UPoly q = qdet_plus(Y);
        for (int k = 0; k <= 3; ++k) {
            InvarianceReport r = centrality(Y, q.coeff(k), 3);
            CAPTURE(k);
            CHECK_MESSAGE(r.invariant, r.witness);
        }
    }
    // a single generator is not central: control for the check itself
    DoubleYangian Y(2, 0);
    Y.set_cap(6);
    CHECK_FALSE(centrality(Y, Element::monomial({t(1, 1, -1)}), 1).invariant);
}

TEST_CASE("partial traces of the antisymmetrizer") {
    DoubleYangian Y(2, -2);
    Y.set_cap(6);
    for (int m = 1; m <= 2; ++m) CHECK(onemtd_direct(Y, m) == onemtd_resummed(Y, m));
}

TEST_CASE("immanant coefficients commute") {
    DoubleYangian Y(2, 0);
    Y.set_cap(7);
    std::vector<UPoly> series;
    for (int m = 1; m <= 3; ++m)
        for (const auto& mu : partitions(m, 2)) series.push_back(quantum_immanant(Y, standard_tableaux(mu)[0]));
    for (std::size_t a = 0; a < series.size(); ++a)
        for (std::size_t b = a; b < series.size(); ++b)
            for (int i = 0; i <= 4; ++i)
                for (int j = 0; j <= 4; ++j) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CHECK(dual_commute(Y, series[a].coeff(i), series[b].coeff(j)));
                }
    // control: generic dual generators do not commute
    CHECK_FALSE(dual_commute(Y, Element::monomial({t(1, 2, -1)}), Element::monomial({t(2, 1, -1)})));
}

TEST_CASE("Theta_1 expands to the traces of the generator matrices") {
    DoubleYangian Y(2, -2);
    Y.set_cap(6);
    FamilySeries f = family_series(Y, FamilyKind::Theta, 1);
    CHECK(f.divisible);
    HSeries expect;
    for (int r = 1; r <= 6; ++r)
        expect.add(r - 1, 0, Element::monomial({t(1, 1, -r)}) + Element::monomial({t(2, 2, -r)}));
    CHECK(f.series == expect);
}

TEST_CASE("families are h^m divisible with the Feigin-Frenkel classical limits") {
    const int D = 6;
    DoubleYangian Y(2, -2);
    Y.set_cap(D);
    LoopEngine U(2, -2);
    U.set_cap(D);
    for (FamilyKind kind : {FamilyKind::Phi, FamilyKind::Psi, FamilyKind::Theta})
        for (int m = 1; m <= 2; ++m) {
            CAPTURE(static_cast<int>(kind));
            CAPTURE(m);
            FamilySeries f = family_series(Y, kind, m);
            CHECK(f.divisible);
            CHECK(f.exact_u == D - m);
            UPoly lim = upto(family_classical_limit(f, U), f.exact_u);
            UPoly ff = upto(ff_generator(U, kind, m), f.exact_u);
            CHECK(lim == ff);
            CHECK_FALSE(ff.is_zero());
        }
    // the bracket without its top k-term is not divisible: control for the check
    UPoly partial = trace_family(Y, 1).scaled(-1);
    CHECK(h_graded(Y, partial, 1).min_h_power() < 0);
}

TEST_CASE("Feigin-Frenkel generators") {
    LoopEngine U(2, -2);
    U.set_cap(5);
    // phi_10 = N, phi_11 = tr E+(u)
    OperatorAlgebra alg(U, OpFlavor::Derivation);
    ShiftOperator tr1 = antisymmetrized_trace(alg, classical_matrix(U), 1);
    CHECK(tr1.coeff(1) == UPoly::constant(Element::scalar(2)));
    CHECK(tr1.coeff(0) == e_plus_poly(U, 1, 1) + e_plus_poly(U, 2, 2));
    CHECK(ff_generator(U, FamilyKind::Theta, 1) == ff_generator(U, FamilyKind::Phi, 1));

    std::vector<Element> probe;
    for (int m = 1; m <= 2; ++m) {
        UPoly phi = ff_generator(U, FamilyKind::Phi, m);
        for (int r = 0; r <= 3; ++r) {
            InvarianceReport rep = affine_invariance(U, phi.coeff(r), 2, "phi");
            CAPTURE(m);
            CAPTURE(r);
            CHECK_MESSAGE(rep.invariant, rep.witness);
            probe.push_back(phi.coeff(r));
        }
    }
    CHECK(rank_of(probe) == static_cast<int>(probe.size()));
    CHECK(rank_of({probe[0], probe[1], probe[0] + probe[1]}) == 2);

    // away from the critical level the quadratic generator is not invariant
    LoopEngine U0(2, 0);
    U0.set_cap(5);
    CHECK_FALSE(affine_invariance(U0, ff_generator(U0, FamilyKind::Phi, 2).coeff(0), 2).invariant);
}

TEST_CASE("affine action on the vacuum module") {
    LoopEngine U(2, -2);
    Element vac = Element::scalar(1);
    CHECK(U.act(E(1, 2, 0), vac).is_zero());
    CHECK(U.act(E(1, 1, 2), vac).is_zero());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    Rational coef = Rational(-2) * (Rational((k == j && i == l) ? 1 : 0) -
                                                    Rational((i == j && k == l) ? 1 : 0) / 2);
                    CHECK(U.act_word({E(i, j, 1), E(k, l, -1)}, vac) == Element::scalar(coef));
                }
}

TEST_CASE("classical limit of dual elements") {
    DoubleYangian Y(2, 0);
    Y.set_cap(6);
    LoopEngine U(2, 0);
    CHECK(classical_limit(Element::monomial({t(1, 2, -1)}), U) == Element::monomial({E(1, 2, -1)}));
    Element w = Y.word({t(2, 1, -1), t(1, 2, -2)});
    CHECK(classical_limit(w, U) == U.word({E(2, 1, -1), E(1, 2, -2)}));
}

TEST_CASE("noncritical center") {
    DoubleYangian Y1(1, 0);
    Y1.set_cap(6);
    auto d1 = noncritical_generators(Y1, 3);
    for (int r = 0; r <= 3; ++r) CHECK(d1[r] == Element::monomial({t(1, 1, -r - 1)}));

    const int D = 8;
    for (Rational c : {Rational(0), Rational(1)}) {
        DoubleYangian Y(2, c);
        Y.set_cap(D);
        LoopEngine U(2, c);
        auto d = noncritical_generators(Y, 3);
        for (int r = 0; r <= 3; ++r) {
            InvarianceReport rep = invariance(Y, d[r], 4, D, "d_r");
            CHECK_MESSAGE(rep.invariant, rep.witness);
            Element expect = Element::monomial({E(1, 1, -r - 1)}) + Element::monomial({E(2, 2, -r - 1)});
            CHECK(noncritical_classical_limit(Y, d[r], r, U) == expect);
        }
    }
}

TEST_CASE("completed-algebra elements T~ commute on a state basket") {
    const int D = 4;
    DoubleYangian Y(2, -2);
    Y.set_cap(D);
    std::vector<Element> basket = {Element::scalar(1), Element::monomial({t(2, 1, -1)}),
                                   Y.word({t(1, 2, -1), t(1, 1, -2)})};
    for (const auto& mu : {YoungDiagram({1}), YoungDiagram({2}), YoungDiagram({1, 1})}) {
        StandardTableau U = standard_tableaux(mu)[0];
        CAPTURE(U.str());
        TildeReport r = ttilde_central_check(Y, U, basket, -2, 2, 2);
        CHECK_MESSAGE(r.ok, r.witness);
        CHECK(r.checks > 0);
    }
    DoubleYangian Y0(2, 0);
    Y0.set_cap(D);
    CHECK_THROWS_AS(ttilde_central_check(Y0, standard_tableaux(YoungDiagram({1}))[0], basket, 0, 0, 1), UsageError);
}

TEST_CASE("T~ for the column diagram is the qdet ratio") {
    const int D = 5;
    DoubleYangian Y(2, -2);
    Y.set_cap(D);
    StandardTableau col = standard_tableaux(YoungDiagram({1, 1}))[0];
    for (const Element& v : {Element::monomial({t(2, 1, -1)}), Y.word({t(1, 1, -1), t(1, 2, -2)})}) {
        UPoly a = ttilde_apply(Y, col, v, D + 2);
        UPoly b = qdet_ratio_apply(Y, v, D + 2);
        for (int q = -2; q <= 2; ++q) CHECK(weight_truncated(Y, a.coeff(q) - b.coeff(q), D + std::min(0, q + 1)).is_zero());
    }
}

TEST_CASE("away from the critical level T~ of a single box is not central") {
    const int D = 5;
    DoubleYangian Y(2, 0);
    Y.set_cap(D);
    StandardTableau box = standard_tableaux(YoungDiagram({1}))[0];
    Element v = Element::monomial({t(2, 1, -1)});
    UPoly tv = ttilde_apply(Y, box, v, D + 2);
    int nonzero = 0;
    for (int r = 1; r <= 2; ++r)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                Gen g = t(i, j, r);
                UPoly rhs = ttilde_apply(Y, box, Y.act(g, v), D + 2);
                for (int q = -2; q <= 2; ++q)
                    nonzero += !weight_truncated(Y, Y.act(g, tv.coeff(q)) - rhs.coeff(q), D + std::min(0, q + 1) - r + 1)
                                    .is_zero();
            }
    CHECK(nonzero > 0);
}
