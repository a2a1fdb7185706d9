#pragma once

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "ycl/pbw.hpp"
#include "ycl/tensor.hpp"

namespace ycl {

// Vacuum-module vectors are dual-only elements applied to the vacuum.
using VacuumState = Element;

// Double Yangian of gl_N with the central element fixed to the level c.
// Generators t_ij^(r), r != 0: r < 0 dual, r > 0 Yangian. Normal order puts
// every dual generator before every Yangian one, then (i, j)
// lexicographically, then ascending r. The weight of t^(-r) is r, Yangian
// generators have weight 0; a cap on the weight is exact modulo the span of
// heavier monomials, up to the weight loss of pushing Yangian generators
// right (at most r - 1 per generator t^(r)).
class DoubleYangian : public PBWEngine {
public:
    // Dual normal ordering does not terminate without a cap.
    static constexpr int kDefaultCap = 8;
    DoubleYangian(int N, Rational level);
    int N() const { return N_; }
    const Rational& level() const { return c_; }

    static Gen t(int i, int j, int r);
    static int gi(Gen g) { return static_cast<int>((g >> 20) & 0xff); }
    static int gj(Gen g) { return static_cast<int>((g >> 12) & 0xff); }
    static int gr(Gen g) { return static_cast<int>(g & 0xfff) - 2048; }
    static bool is_dual(Gen g) { return (g >> 28) == 0; }

    std::vector<Word> swap(Gen x, Gen y) const override;
    int weight(Gen g) const override { return is_dual(g) ? -gr(g) : 0; }
    bool kills_vacuum(Gen g) const override { return !is_dual(g); }
    std::string name(Gen g) const override;

    // Filtration degree: r - 1 for t^(r), r for t^(-r) with r < 0.
    static int degree(Gen g) { return is_dual(g) ? gr(g) : gr(g) - 1; }
    static int degree(const Monomial& m);
    // Total r - 1 over the Yangian factors: bound on the dual-weight loss.
    static int yangian_excess(const std::vector<Gen>& w);

    // t_ij^(r) t_kl^(-s) as a finite combination of (dual)(Yangian) words.
    std::vector<Word> mixed_rule(int i, int j, int r, int k, int l, int s) const;
    // Coefficients f_n,p of x^{-p} in the four scalar functions of the mixed
    // relation, p = 0..K.
    const std::vector<std::array<Rational, 4>>& mixed_coefficients(int K) const;

    // Coefficient of v^k in t+_ij(v) = d_ij - sum_s t_ij^(-s) v^{s-1}.
    Element t_plus_coeff(int i, int j, int k) const;

private:
    int N_;
    Rational c_;
    mutable std::vector<std::array<Rational, 4>> fcoef_;
    mutable std::map<std::tuple<int, int, int, int, int, int>, std::vector<Word>> mixed_cache_;
};

// t_ij^(r) applied to [v^n] T+_{k1 l1}(v_1)...T+_{kp lp}(v_p) vac by R-bar
// conjugation of T_0(z), independent of the mixed rule tables.
struct ProductState {
    std::vector<int> k, l, n;
};
VacuumState product_state(DoubleYangian& Y, const ProductState& s);
VacuumState act_by_conjugation(DoubleYangian& Y, int i, int j, int r, const ProductState& s);

// Keep monomials of weight at most w.
Element weight_truncated(const PBWEngine& e, const Element& x, int w);
// Terms of the maximal filtration degree; returns that degree through deg.
Element leading_part(const Element& x, int* deg = nullptr);

// ev_a at level 0 into U(gl_N): t_ij^(r) -> E_ij a^{r-1}, t_ij^(-r) -> E_ij a^{-r}.
Element evaluation_hom(const DoubleYangian& Y, const Element& x, const Rational& a, LoopEngine& U);

// Image of the graded map t_ij^(r) -> E_ij[r-1], t_ij^(-r) -> E_ij[-r].
Element graded_image(const Element& x, LoopEngine& U);

}  // namespace ycl
