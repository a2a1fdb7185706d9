#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace ycl {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" with q omitted when 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

// Generalized binomial coefficient a(a-1)...(a-k+1)/k!; zero for k < 0.
Rational binomial(const Rational& a, int k);
Integer binomial(long n, long k);
Integer factorial(long n);

// Dense univariate polynomial; c[k] is the coefficient of x^k, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c0);
    static Poly x();
    static Poly from_coeffs(std::vector<Rational> c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational lead() const;
    Rational eval(const Rational& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Euclidean division; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0

private:
    void trim();
    std::vector<Rational> c_;
};

// Reduced univariate rational function: gcd(num, den) = 1, den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);
    static RatFunc x() { return RatFunc(Poly::x(), Poly(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    // Value at a point that is not a pole; UsageError at a pole.
    Rational eval(const Rational& x) const;
    // f(x + a).
    RatFunc shifted(const Rational& a) const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

private:
    void normalize();
    Poly num_, den_;
};

// Ordered variable list; earlier variables dominate later ones.
class VarOrder {
public:
    VarOrder() = default;
    VarOrder(std::vector<std::string> names);
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::size_t index_of(const std::string& v) const;
    bool operator==(const VarOrder& o) const { return names_ == o.names_; }
    bool operator!=(const VarOrder& o) const { return names_ != o.names_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
};

// How a variable is truncated.
//   Exact: every coefficient known, support in [lo, hi].
//   Laurent: support bounded above by hi, coefficients known for exponent >= lo.
//   Taylor: support bounded below by lo, coefficients known for exponent <= hi.
enum class Trunc { Exact, Laurent, Taylor };

struct Window {
    int lo = 0;
    int hi = 0;
    Trunc trunc = Trunc::Exact;
    bool operator==(const Window& o) const { return lo == o.lo && hi == o.hi && trunc == o.trunc; }
};

using Exps = std::vector<int>;

// Truncated iterated-Laurent series over the rationals. Stored terms all lie
// in the known region; a coefficient outside it is unknown, never zero.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(VarOrder order, std::vector<Window> windows);

    // Exactly zero; neutral for addition in any window.
    static TruncSeries zero(const VarOrder& order);
    static TruncSeries constant(const VarOrder& order, const Rational& c);
    static TruncSeries monomial(const VarOrder& order, const Exps& e, const Rational& c);
    // Single-variable convenience: variable "name", given window.
    static TruncSeries univariate(const std::string& name, Window w,
                                  const std::map<int, Rational>& coeffs);

    const VarOrder& order() const { return order_; }
    const std::vector<Window>& windows() const { return win_; }
    const Window& window(std::size_t v) const { return win_[v]; }
    bool is_exact_zero() const { return exact_zero_; }
    const std::map<Exps, Rational>& terms() const { return terms_; }

    bool known(const Exps& e) const;
    // TruncationError if e is not known.
    Rational coeff(const Exps& e) const;
    Rational coeff1(int e) const { return coeff(Exps{e}); }
    void set(const Exps& e, const Rational& c);
    void add_to(const Exps& e, const Rational& c);

    // Restrict to a smaller known region.
    TruncSeries truncated(std::size_t v, int lo, int hi) const;
    TruncSeries with_windows(std::vector<Window> w) const;
    // Same data, new variable order names; exponent positions unchanged.
    TruncSeries renamed(const VarOrder& order) const;
    // Embed into a larger order; missing variables become Exact [0,0].
    TruncSeries embedded(const VarOrder& order) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const Rational& c) const;
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    // Agreement on the common known region.
    bool equal_on_common(const TruncSeries& o) const;
    // Every known coefficient is zero.
    bool is_zero() const;
    std::string str() const;

private:
    void clip();
    VarOrder order_;
    std::vector<Window> win_;
    std::map<Exps, Rational> terms_;
    bool exact_zero_ = false;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_invert(const TruncSeries& a);
// var -> var + offset.
TruncSeries series_shift(const TruncSeries& a, const std::string& var, const Rational& offset);
// var -> var + offset, offset a series in variables strictly after var.
TruncSeries series_shift(const TruncSeries& a, const std::string& var, const TruncSeries& offset);

// f(x) given as a univariate Laurent series in x, re-expanded at
// x = first - second + shift, Laurent in the first variable and Taylor in the
// second (the second variable is the smaller one).
TruncSeries expand_difference(const TruncSeries& f, const VarOrder& order, std::size_t first,
                              std::size_t second, const Rational& shift, int second_hi);

// g(u) = 1 + sum g_k u^{-k}, k <= K, fixed by g(u+N) = g(u)(1 - u^{-2}).
TruncSeries compute_g(int N, int K, const std::string& var = "u");

}  // namespace ycl
