#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ycl/center.hpp"
#include "ycl/yangian.hpp"

namespace ycl {

// [prod_f u_f^{power_f}] t+_{k_1 l_1}(u_{var_1} + shift_1)...t+_{k_n l_n}(u_{var_n} + shift_n) vac,
// at h = 1. Indices are 1-based; power has one entry per family variable.
struct Source {
    std::vector<int> k, l, var;
    std::vector<Rational> shift;
    std::vector<int> power;

    int legs() const { return static_cast<int>(k.size()); }
    int degree() const;
    bool operator<(const Source& o) const;
    bool operator==(const Source& o) const;
};
using SourceSum = std::vector<std::pair<Source, Rational>>;

Source product_source(const ProductState& s);
std::string source_label(const Source& s);
// Exact to the weight cap.
Element source_state(DoubleYangian& Y, const Source& s);
Element source_state(DoubleYangian& Y, const SourceSum& s);
// Exact rewriting of a state as a combination of product sources.
SourceSum decompose(DoubleYangian& Y, const Element& state);
// [u^a] sum_sigma sgn(sigma) t+_{sigma(1) 1}(u)...t+_{sigma(N) N}(u - N + 1) vac.
SourceSum qdet_source(int N, int a);

// A probe vector together with its generating degree A: a std monomial of
// weight W in any output coefficient at z-exponents b carries h^{W - A - sum b}.
struct Probe {
    SourceSum src;
    int degree = 0;
    std::string label;
};
Probe probe_of(const ProductState& s, const std::string& label = "");
Probe qdet_probe(int N, int a);

struct VertexContext {
    int depth = 4;  // z^{-1}-depth of T(x)^{-1} expansions
    int z_lo = -3;
    int z_hi = 3;
    int h_order = 2;
};

// State-valued series in one or more z-variables. exact is the weight up to
// which the coefficient is known.
struct ZCoeff {
    Element x;
    int exact = 0;
};
using ZSeries = std::map<Exps, ZCoeff>;

// Y(src vac, z) w = T+_n(u|z) T_n(u|z + c/2)^{-1} w at h = 1. With w exact
// to weight E the z^b coefficient is exact to min(D, E + min(0, b + 1), b + depth).
// Coefficients run over -depth <= b <= min(D, z_max).
ZSeries vertex_Y(DoubleYangian& Y, const Source& src, const Element& w, int w_exact, int depth, int z_max = INT_MAX);
ZSeries vertex_Y(DoubleYangian& Y, const SourceSum& src, const Element& w, int w_exact, int depth,
                 int z_max = INT_MAX);
// Y(T+_n(u) vac, z) = T+_n(u|z): the structure on the dual Yangian alone.
ZSeries vertex_Y_dual(DoubleYangian& Y, const SourceSum& src, const Element& w);

// e^{zD} T+(u_1)...T+(u_n) vac = T+(z + u_1)...T+(z + u_n) vac; D t^(-r) = r t^(-r-1) as a derivation.
Element translation_D(DoubleYangian& Y, const Element& state);

// Laurent polynomial in h, z_1, z_2, ...; exponent 0 is the h-power.
class HSer {
public:
    HSer() = default;
    explicit HSer(int h_max) : H_(h_max) {}
    static HSer one(int h_max, int z_vars = 1);
    int h_max() const { return H_; }
    const std::map<Exps, Rational>& terms() const { return c_; }
    void add(const Exps& e, const Rational& c);
    HSer operator+(const HSer& o) const;
    HSer operator-(const HSer& o) const;
    // Product with h-powers above h_max dropped.
    HSer operator*(const HSer& o) const;
    HSer scaled(const Rational& c) const;
    bool is_zero() const { return c_.empty(); }
    std::string str() const;

private:
    int H_ = 0;
    std::map<Exps, Rational> c_;
};

// Superoperator of S(z) on End(C^N)^{n+m} with row legs 1..L and column legs
// L+1..2L. Entries are series in (z, u_0.., v_0..) for the given leg layouts,
// z Laurent to depth K, family variables Taylor up to the given powers.
struct SLayout {
    std::vector<int> var;
    std::vector<Rational> shift;
    std::vector<int> power;
};
SeriesOp s_operator(int N, const Rational& c, const SLayout& left, const SLayout& right, int K);

struct STerm {
    Source left, right;
    HSer f;  // exponents (h, z)
};
// S(z)(P vac tensor Q vac) with all terms of h-order <= h_max; h-form sources.
std::vector<STerm> s_map(int N, const Rational& c, const Source& P, const Source& Q, int h_max);
// Same through the transposed-inverse form ^{lr}((^{rl}R(z - c))^{-1}).
std::vector<STerm> s_map_inverse_form(int N, const Rational& c, const Source& P, const Source& Q, int h_max);

struct AxiomReport {
    bool ok = true;
    int checks = 0;
    std::string witness;
    void fail(const std::string& w) {
        if (ok) witness = w;
        ok = false;
    }
};

AxiomReport check_v1(DoubleYangian& Y, const std::vector<Element>& states);
AxiomReport check_v2(DoubleYangian& Y, const std::vector<Probe>& probes, const VertexContext& ctx);
AxiomReport check_d1(DoubleYangian& Y);
AxiomReport check_d2(DoubleYangian& Y, const Probe& v, const Probe& w, const VertexContext& ctx);
AxiomReport check_s0(int N, const Rational& c, const Source& P, const Source& Q);
AxiomReport check_s3(int N, const Rational& c, const Source& P, const Source& Q, int h_max);
AxiomReport check_s2(int N, const Rational& c, const Source& P, const Source& Q, const Source& R, int h_max,
                     int z2_max);
// Y(z1)(1 x Y(z2))(S(z1 - z2)(v x w) x u) = Y(z2)(1 x Y(z1))(w x v x u) for central v, u.
AxiomReport check_sloc(DoubleYangian& Y, const Probe& v, const Probe& w, const Probe& u, const VertexContext& ctx);
// Y(v, z0 + z2) Y(w, z2) u = Y(Y(v, z0) w, z2) u for central w, u.
AxiomReport check_strong_associativity(DoubleYangian& Y, const Probe& v, const Probe& w, const Probe& u,
                                       const VertexContext& ctx);
// Every s-product v_s u of central v, u is annihilated by t_ij^(r), r <= s_max.
AxiomReport check_center_closure(DoubleYangian& Y, const Probe& v, const Probe& u, int s_max,
                                 const VertexContext& ctx);

// w_{-1} u, the coefficient of z^0 in Y(w, z) u. With verify, both arguments
// must be annihilated by t_ij^(r), r <= s_max (UsageError otherwise).
Element center_product(DoubleYangian& Y, const Element& w, const Element& u, bool verify = true, int s_max = 3);

// Dual-Yangian structure: Y(v, z) w has no negative z-powers on every probe pair.
AxiomReport check_dual_center(DoubleYangian& Y, const std::vector<Element>& states);
// [t_12^(-1), t_21^(-1)] through the (-1)-products of the dual structure; nonzero for N >= 2.
Element dual_noncommutativity_witness(DoubleYangian& Y);

}  // namespace ycl
