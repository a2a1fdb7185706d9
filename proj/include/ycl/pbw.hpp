#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ycl/errors.hpp"
#include "ycl/scalars.hpp"

namespace ycl {

using Gen = std::uint32_t;
using Monomial = std::vector<Gen>;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = m.size();
        for (Gen g : m) h ^= g + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Exact linear combination of monomials. Zero coefficients are never stored.
class Element {
public:
    Element() = default;
    static Element scalar(const Rational& c);
    static Element monomial(const Monomial& m, const Rational& c = 1);

    const std::map<Monomial, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    Rational coeff(const Monomial& m) const;
    Rational constant() const { return coeff({}); }

    void add_term(const Monomial& m, const Rational& c);
    void add_scaled(const Element& o, const Rational& c);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const { return scaled(-1); }
    Element scaled(const Rational& c) const;
    Element& operator+=(const Element& o) {
        add_scaled(o, 1);
        return *this;
    }
    Element& operator-=(const Element& o) {
        add_scaled(o, -1);
        return *this;
    }
    bool operator==(const Element& o) const { return t_ == o.t_; }
    // Keep only monomials accepted by the predicate.
    Element filtered(const std::function<bool(const Monomial&)>& keep) const;

private:
    std::map<Monomial, Rational> t_;
};

// A product of generators with a coefficient; the result of one swap step.
struct Word {
    Rational coef;
    std::vector<Gen> gens;
};

// Normal ordering by left insertion. Generators are ordered by their codes;
// swap(x, y) for y < x rewrites the product x*y as words of lower complexity.
// An optional weight cap drops monomials whose weight exceeds it; weights of
// all generators are nonnegative and the dropped terms span an ideal of the
// capped sub-algebra.
class PBWEngine {
public:
    virtual ~PBWEngine() = default;

    virtual std::vector<Word> swap(Gen x, Gen y) const = 0;
    virtual int weight(Gen) const { return 0; }
    virtual bool kills_vacuum(Gen) const { return false; }
    virtual std::string name(Gen g) const = 0;

    void set_cap(std::optional<int> cap);
    std::optional<int> cap() const { return cap_; }
    int weight(const Monomial& m) const;
    // Number of monomials dropped by the weight cap since the last reset.
    std::uint64_t dropped() const { return dropped_; }
    void reset_dropped() { dropped_ = 0; }
    std::size_t memo_size() const { return memo_.size() + act_memo_.size(); }

    Element mul_gen(Gen g, const Monomial& m);
    Element mul_gen(Gen g, const Element& x);
    Element mul(const Element& a, const Element& b);
    Element word(const std::vector<Gen>& gens);
    Element commutator(const Element& a, const Element& b);

    // Action on the vacuum module: states are combinations of monomials in
    // generators that do not kill the vacuum.
    Element act(Gen g, const Monomial& m);
    Element act(Gen g, const Element& x);
    Element act_word(const std::vector<Gen>& gens, const Element& x);

    std::string str(const Element& x) const;
    std::string str(const Monomial& m) const;

protected:
    bool over_cap(const Monomial& m) const;
    void clear_memo();

private:
    std::optional<int> cap_;
    std::uint64_t dropped_ = 0;
    std::unordered_map<Monomial, Element, MonomialHash> memo_;
    std::unordered_map<Monomial, Element, MonomialHash> act_memo_;
};

// Loop algebra gl_N[t, t^{-1}] plus a central element fixed to the level K:
// [E_ij[r], E_kl[s]] = d_kj E_il[r+s] - d_il E_kj[r+s] + r d_{r,-s} K (d_kj d_il - d_ij d_kl / N).
// Order: ascending mode r, then (i, j). Nonnegative modes kill the vacuum.
class LoopEngine : public PBWEngine {
public:
    LoopEngine(int N, Rational K);
    int N() const { return N_; }
    const Rational& level() const { return K_; }

    static Gen E(int i, int j, int r);
    static int gi(Gen g) { return static_cast<int>((g >> 8) & 0xff); }
    static int gj(Gen g) { return static_cast<int>(g & 0xff); }
    static int gr(Gen g) { return static_cast<int>(g >> 16) - 2048; }

    std::vector<Word> swap(Gen x, Gen y) const override;
    int weight(Gen g) const override { return gr(g) < 0 ? -gr(g) : 0; }
    bool kills_vacuum(Gen g) const override { return gr(g) >= 0; }
    std::string name(Gen g) const override;

private:
    int N_;
    Rational K_;
};

}  // namespace ycl
