#include <random>

#include "doctest.h"
#include "ycl/yangian.hpp"

using namespace ycl;

namespace {

Gen t(int i, int j, int r) { return DoubleYangian::t(i, j, r); }
Element M(std::vector<Gen> w, Rational c = 1) { return Element::monomial(w, c); }
int d(int a, int b) { return a == b ? 1 : 0; }

Gen random_gen(std::mt19937& rng, int N, int rmax, bool dual) {
    std::uniform_int_distribution<int> idx(1, N), rr(1, rmax);
    int r = rr(rng);
    return t(idx(rng), idx(rng), dual ? -r : r);
}

}  // namespace

TEST_CASE("pure Yangian and pure dual brackets") {
    DoubleYangian Y(2, -2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    Element lhs = Y.commutator(M({t(i, j, 1)}), M({t(k, l, 1)}));
                    Element rhs = M({t(i, l, 1)}, d(k, j)) - M({t(k, j, 1)}, d(i, l));
                    CHECK(lhs == rhs);
                    Element dl = Y.commutator(M({t(i, j, -1)}), M({t(k, l, -1)}));
                    Element dr = M({t(i, l, -2)}, d(k, j)) - M({t(k, j, -2)}, d(i, l)) +
                                 Y.word({t(k, j, -2), t(i, l, -1)}) - Y.word({t(k, j, -1), t(i, l, -2)});
                    CHECK(dl == dr);
                }
    CHECK(Y.word({t(1, 1, -1), t(1, 1, -1)}) == M({t(1, 1, -1), t(1, 1, -1)}));
    CHECK(Y.word({t(1, 2, -1), t(1, 2, -3)}) == M({t(1, 2, -3), t(1, 2, -1)}));
}

TEST_CASE("vacuum is annihilated by the Yangian half") {
    DoubleYangian Y(2, Rational(1, 3));
    for (int s = 1; s <= 4; ++s)
        CHECK(Y.act(t(1, 2, s), Element::scalar(1)).is_zero());
}

TEST_CASE("N=1 mixed rule matches the scalar gamma factor") {
    // t(u) t+(v) = gamma_c(u - v) t+(v) t(u),
    // gamma_c(x) = g(x - c/2)(1 - (x - c/2)^{-1}) / [g(x + c/2)(1 - (x + c/2)^{-1})]
    const int K = 6;
    for (Rational c : {Rational(0), Rational(-1), Rational(1, 2), Rational(3)}) {
        DoubleYangian Y(1, c);
        Y.set_cap(12);
        TruncSeries one = TruncSeries::constant(VarOrder({"u"}), 1);
        auto side = [&](const Rational& sh) {
            TruncSeries g = series_shift(compute_g(1, K), "u", sh);
            TruncSeries inv = series_shift(TruncSeries::univariate("u", Window{-K, -1, Trunc::Laurent}, {{-1, 1}}),
                                           "u", sh);
            return g * (one - inv);
        };
        TruncSeries gamma = side(-c / 2) * series_invert(side(c / 2));
        for (int r = 1; r <= 4; ++r) {
            for (int s = 1; s <= 4; ++s) {
                VarOrder uv({"u", "v"});
                TruncSeries G = expand_difference(gamma, uv, 0, 1, 0, s - 1);
                Element expect;
                if (s == 1) expect.add_term({t(1, 1, r)}, 1);
                for (const auto& [e, gc] : G.terms()) {
                    int a = -e[0], b = e[1];
                    int rp = r - a, k = s - 1 - b;
                    if (rp < 0 || k < 0) continue;
                    // t+(v)_k t(u)_{r'} with t+_0 = 1 - t^(-1), t+_k = -t^(-k-1), t_0 = 1
                    Element tau = Element::monomial({t(1, 1, -k - 1)}, -1);
                    if (k == 0) tau.add_term({}, 1);
                    Element prod = rp == 0 ? tau : Y.mul(tau, M({t(1, 1, rp)}));
                    expect.add_scaled(prod, -gc);
                }
                CAPTURE(r);
                CAPTURE(s);
                CHECK(Y.word({t(1, 1, r), t(1, 1, -s)}) == expect);
            }
        }
    }
}

TEST_CASE("evaluation homomorphism at level 0") {
    DoubleYangian Y(2, 0);
    Y.set_cap(12);
    LoopEngine U(2, 0);
    CHECK(evaluation_hom(Y, M({t(1, 2, 1)}), 3, U) == Element::monomial({LoopEngine::E(1, 2, 0)}));
    CHECK(evaluation_hom(Y, M({t(1, 2, -2)}), 2, U) == Element::monomial({LoopEngine::E(1, 2, 0)}, Rational(1, 4)));
    CHECK_THROWS_AS(evaluation_hom(Y, M({t(1, 1, 1)}), 0, U), UsageError);
    DoubleYangian Yc(2, 1);
    CHECK_THROWS_AS(evaluation_hom(Yc, M({t(1, 1, 1)}), 1, U), UsageError);
    std::mt19937 rng(7);
    for (Rational a : {Rational(1), Rational(2), Rational(-1)}) {
        for (int trial = 0; trial < 60; ++trial) {
            Gen x = random_gen(rng, 2, 3, rng() % 2);
            Gen y = random_gen(rng, 2, 3, rng() % 2);
            Element lhs = U.mul(evaluation_hom(Y, M({x}), a, U), evaluation_hom(Y, M({y}), a, U));
            Element rhs = evaluation_hom(Y, Y.word({x, y}), a, U);
            CAPTURE(Y.str(Y.word({x, y})));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("graded leading terms follow the affine bracket") {
    for (Rational c : {Rational(0), Rational(-2), Rational(1)}) {
        DoubleYangian Y(2, c);
        Y.set_cap(10);
        LoopEngine U(2, c);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k)
                    for (int l = 1; l <= 2; ++l)
                        for (int r = 1; r <= 3; ++r)
                            for (int s = 1; s <= 3; ++s) {
                                Element x = M({t(i, j, r)}), y = M({t(k, l, -s)});
                                Element br = Y.commutator(x, y);
                                int top = r - 1 - s;
                                Element lead = br.filtered(
                                    [&](const Monomial& m) { return DoubleYangian::degree(m) >= top; });
                                Element expect = U.commutator(Element::monomial({LoopEngine::E(i, j, r - 1)}),
                                                              Element::monomial({LoopEngine::E(k, l, -s)}));
                                CAPTURE(Y.str(br));
                                CHECK(graded_image(lead, U) == expect);
                            }
    }
}

TEST_CASE("diamond: bracketings of random words agree") {
    std::mt19937 rng(2024);
    const int D = 7;
    for (Rational c : {Rational(0), Rational(-2), Rational(1)}) {
        DoubleYangian Y(2, c);
        Y.set_cap(D);
        for (int trial = 0; trial < 25; ++trial) {
            int len = 2 + rng() % 4;
            std::vector<Gen> w;
            for (int q = 0; q < len; ++q) w.push_back(random_gen(rng, 2, 2, rng() % 2));
            int split = 1 + rng() % (len - 1);
            Element left = Y.mul(Y.word({w.begin(), w.begin() + split}), Y.word({w.begin() + split, w.end()}));
            Element right = Y.word(w);
            int exact = D - DoubleYangian::yangian_excess(w);
            CAPTURE(Y.str(Element::monomial(w)));
            CHECK(weight_truncated(Y, left, exact) == weight_truncated(Y, right, exact));
        }
    }
}

TEST_CASE("rule-based action agrees with R-bar conjugation") {
    std::mt19937 rng(99);
    for (Rational c : {Rational(0), Rational(-2), Rational(1)}) {
        DoubleYangian Y(2, c);
        Y.set_cap(8);
        for (int trial = 0; trial < 12; ++trial) {
            ProductState s;
            int p = 1 + rng() % 2;
            for (int a = 0; a < p; ++a) {
                s.k.push_back(1 + rng() % 2);
                s.l.push_back(1 + rng() % 2);
                s.n.push_back(rng() % 3);
            }
            int i = 1 + rng() % 2, j = 1 + rng() % 2, r = 1 + rng() % 4;
            VacuumState st = product_state(Y, s);
            CHECK(act_by_conjugation(Y, i, j, r, s) == Y.act(t(i, j, r), st));
        }
    }
}

TEST_CASE("dual products stabilize as the weight cap grows") {
    std::mt19937 rng(5);
    DoubleYangian small(2, 0), big(2, 0);
    small.set_cap(6);
    big.set_cap(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Gen> w;
        for (int q = 0; q < 3; ++q) w.push_back(random_gen(rng, 2, 2, true));
        CHECK(weight_truncated(big, big.word(w), 6) == small.word(w));
    }
    CHECK(small.dropped() > 0);
}
