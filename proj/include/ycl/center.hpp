#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ycl/diffop.hpp"
#include "ycl/fusion.hpp"
#include "ycl/yangian.hpp"

namespace ycl {

// All series below use generators at h = 1; coefficients are exact modulo
// the weight cap of the engine.

// tr E T+_1(u + s_1)...T+_m(u + s_m).
UPoly shifted_trace(DoubleYangian& Y, const RatOp& E, const std::vector<Rational>& shifts);
// Quantum immanant: E = E_U, s_a = content of a.
UPoly quantum_immanant(DoubleYangian& Y, const StandardTableau& U);
// sum_sigma sgn(sigma) t+_{sigma(1)1}(u)...t+_{sigma(N)N}(u - N + 1)
UPoly qdet_plus(DoubleYangian& Y);
// tr T+(u) T+(u - 1)...T+(u - m + 1)
UPoly trace_family(DoubleYangian& Y, int m);

// A^(N) T+_1(u)...T+_N(u - N + 1) = A^(N) qdet T+(u), entry by entry.
bool rmatdet_check(DoubleYangian& Y);
// Alternating binomial form of tr A^(m)(1 - T+_1 S)...(1 - T+_m S), S the unit shift.
ShiftOperator onemtd_direct(DoubleYangian& Y, int m);
ShiftOperator onemtd_resummed(DoubleYangian& Y, int m);

struct InvarianceReport {
    bool invariant = true;
    int checks = 0;
    int nonzero = 0;
    std::string witness;  // first non-annihilated (generator, coefficient)
};

// t_ij^(s) x = 0 for s <= s_max, compared up to weight exact - s + 1 where
// x is exact up to weight exact.
InvarianceReport invariance(DoubleYangian& Y, const Element& x, int s_max, int exact, const std::string& label = "");
InvarianceReport invariance(DoubleYangian& Y, const UPoly& series, int u_max, int s_max, int exact,
                            const std::string& label = "");

// [x, y] = 0 for x, y in the dual half, exact to the weight cap.
bool dual_commute(DoubleYangian& Y, const Element& x, const Element& y);
// [t_ij^(+-s), x] = 0 in the double Yangian for s <= s_max, compared within exactness.
InvarianceReport centrality(DoubleYangian& Y, const Element& x, int s_max);

// Coefficients of u^j h^n over the rescaled generators t^(-r) -> h^{-r} t^(-r).
class HSeries {
public:
    const std::map<std::pair<int, int>, Element>& coeffs() const { return c_; }
    Element coeff(int j, int n) const;
    void add(int j, int n, const Element& x, const Rational& scale = 1);
    int min_h_power() const;
    bool operator==(const HSeries& o) const { return c_ == o.c_; }

private:
    std::map<std::pair<int, int>, Element> c_;
};

// Rewrite a series in w = u/h, multiplied by h^{-prefactor}.
HSeries h_graded(const PBWEngine& Y, const UPoly& series, int prefactor = 0);

enum class FamilyKind { Phi, Psi, Theta };

struct FamilySeries {
    HSeries series;
    bool divisible = false;  // all h-powers nonnegative after the h^{-m} prefactor
    int min_h_power = 0;
    // highest u-degree whose h^0 coefficient is exact under the weight cap
    int exact_u = 0;
};

FamilySeries family_series(DoubleYangian& Y, FamilyKind kind, int m);
// h^0 part of a family series, mapped into U(t^{-1} gl_N[t^{-1}]).
UPoly family_classical_limit(const FamilySeries& f, LoopEngine& U);

// Constant term in d/du of tr A^(m) / tr H^(m) / tr of the m-th power of d + E+(u).
UPoly ff_generator(LoopEngine& U, FamilyKind kind, int m);

// Top filtration degree image of a dual element.
Element classical_limit(const Element& x, LoopEngine& U);

// E_ij[s] x = 0 in the vacuum module for 0 <= s <= s_max.
InvarianceReport affine_invariance(LoopEngine& U, const Element& x, int s_max, const std::string& label = "");

// Rank of a family of elements over Q.
int rank_of(const std::vector<Element>& xs);

// qdet T+(u) = 1 - h(d_0 + d_1 u + ...); d_r at h = 1.
std::vector<Element> noncritical_generators(DoubleYangian& Y, int r_max);
// h^0 part of d_r mapped into U(t^{-1} gl_N[t^{-1}]).
Element noncritical_classical_limit(const DoubleYangian& Y, const Element& d, int r, LoopEngine& U);

// (T(x)^{-1})_{kl} w for all rows k as series in x^{-1}, powers down to -depth (l 0-based).
std::vector<UPoly> t_inverse_column(DoubleYangian& Y, int l, const Element& w, int depth);

// T~_mu(u) = tr E_U T+_1(u + c_1)...T+_m(u + c_m) T_m(u + c_m - N/2)^{-1}...T_1(u + c_1 - N/2)^{-1}
// applied to a vacuum-module state. Laurent in u; powers below -depth are dropped.
// With v exact to weight E, the u^q coefficient is exact to weight min(D, E + min(0, q + 1)).
UPoly ttilde_apply(DoubleYangian& Y, const StandardTableau& U, const Element& v, int depth);
// qdet T+(u) (qdet T(u - N/2))^{-1} v.
UPoly qdet_ratio_apply(DoubleYangian& Y, const Element& v, int depth);

struct TildeReport {
    bool ok = true;
    int checks = 0;
    std::string witness;
};

// T~_mu(u) commutes with t_ij^(r) (r <= z_max) and t_ij^(-s) (s <= z_max) on every basket
// state, for u-powers q_min..q_max; T~_mu(u) vac = T+_mu(u) vac.
TildeReport ttilde_central_check(DoubleYangian& Y, const StandardTableau& U, const std::vector<Element>& basket,
                                 int q_min, int q_max, int z_max);

}  // namespace ycl
