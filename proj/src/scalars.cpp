#include "ycl/scalars.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "ycl/errors.hpp"

namespace ycl {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ') t.push_back(ch);
    auto slash = t.find('/');
    Integer num, den(1);
    try {
        if (slash == std::string::npos) {
            num = Integer(t);
        } else {
            num = Integer(t.substr(0, slash));
            den = Integer(t.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational: '" + text + "'");
    }
    if (den == 0) throw UsageError("zero denominator: '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational binomial(const Rational& a, int k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= (a - i);
    r /= Rational(factorial(k));
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c0) {
    if (c0 != 0) c_.push_back(c0);
}

Poly Poly::x() { return from_coeffs({Rational(0), Rational(1)}); }

Poly Poly::from_coeffs(std::vector<Rational> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Rational Poly::lead() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return from_coeffs(std::move(c));
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    int db = b.degree();
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational f = rem[k + db] / b.lead();
        quo[k] = f;
        for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.c_[i];
    }
    q = from_coeffs(std::move(quo));
    r = from_coeffs(std::move(rem));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational l = a.lead();
    for (auto& x : a.c_) x /= l;
    return a;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UsageError("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    Poly q, r;
    if (g.degree() > 0) {
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational l = den_.lead();
    if (l != 1) {
        num_ = num_ * Poly(1 / l);
        den_ = den_ * Poly(1 / l);
    }
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw UsageError("evaluation at a pole");
    return num_.eval(x) / d;
}

static Poly poly_shift(const Poly& p, const Rational& a) {
    Poly r;
    Poly lin = Poly::from_coeffs({a, Rational(1)});
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * lin + Poly(*it);
    return r;
}

RatFunc RatFunc::shifted(const Rational& a) const {
    return RatFunc(poly_shift(num_, a), poly_shift(den_, a));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw UsageError("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

// ---------------------------------------------------------------- VarOrder

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw UsageError("empty variable order");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw UsageError("duplicate variable " + names_[i]);
}

std::size_t VarOrder::index_of(const std::string& v) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == v) return i;
    throw UsageError("unknown variable " + v);
}

// ---------------------------------------------------------------- TruncSeries

namespace {

bool in_support(const Window& w, int e) {
    switch (w.trunc) {
        case Trunc::Exact: return e >= w.lo && e <= w.hi;
        case Trunc::Laurent: return e <= w.hi;
        case Trunc::Taylor: return e >= w.lo;
    }
    return false;
}

bool in_known(const Window& w, int e) {
    switch (w.trunc) {
        case Trunc::Exact: return true;
        case Trunc::Laurent: return e >= w.lo;
        case Trunc::Taylor: return e <= w.hi;
    }
    return false;
}

Trunc combine(Trunc a, Trunc b) {
    if (a == Trunc::Exact) return b;
    if (b == Trunc::Exact) return a;
    if (a != b) throw UsageError("variable truncated in opposite directions");
    return a;
}

Window mul_window(const Window& a, const Window& b) {
    Window r;
    r.trunc = combine(a.trunc, b.trunc);
    switch (r.trunc) {
        case Trunc::Exact:
            r.lo = a.lo + b.lo;
            r.hi = a.hi + b.hi;
            break;
        case Trunc::Laurent:
            r.hi = a.hi + b.hi;
            r.lo = INT_MIN;
            if (a.trunc == Trunc::Laurent) r.lo = std::max(r.lo, a.lo + b.hi);
            if (b.trunc == Trunc::Laurent) r.lo = std::max(r.lo, b.lo + a.hi);
            break;
        case Trunc::Taylor:
            r.lo = a.lo + b.lo;
            r.hi = INT_MAX;
            if (a.trunc == Trunc::Taylor) r.hi = std::min(r.hi, a.hi + b.lo);
            if (b.trunc == Trunc::Taylor) r.hi = std::min(r.hi, b.hi + a.lo);
            break;
    }
    return r;
}

Window add_window(const Window& a, const Window& b) {
    Window r;
    r.trunc = combine(a.trunc, b.trunc);
    switch (r.trunc) {
        case Trunc::Exact:
            r.lo = std::min(a.lo, b.lo);
            r.hi = std::max(a.hi, b.hi);
            break;
        case Trunc::Laurent:
            r.hi = std::max(a.hi, b.hi);
            r.lo = INT_MIN;
            if (a.trunc == Trunc::Laurent) r.lo = std::max(r.lo, a.lo);
            if (b.trunc == Trunc::Laurent) r.lo = std::max(r.lo, b.lo);
            break;
        case Trunc::Taylor:
            r.lo = std::min(a.lo, b.lo);
            r.hi = INT_MAX;
            if (a.trunc == Trunc::Taylor) r.hi = std::min(r.hi, a.hi);
            if (b.trunc == Trunc::Taylor) r.hi = std::min(r.hi, b.hi);
            break;
    }
    return r;
}

std::string exps_str(const VarOrder& o, const Exps& e) {
    std::ostringstream s;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (v) s << ',';
        s << o.name(v) << '^' << e[v];
    }
    return s.str();
}

}  // namespace

TruncSeries::TruncSeries(VarOrder order, std::vector<Window> windows)
    : order_(std::move(order)), win_(std::move(windows)) {
    if (win_.size() != order_.size()) throw UsageError("window count does not match variables");
}

TruncSeries TruncSeries::zero(const VarOrder& order) {
    TruncSeries s(order, std::vector<Window>(order.size(), Window{0, 0, Trunc::Exact}));
    s.exact_zero_ = true;
    return s;
}

TruncSeries TruncSeries::constant(const VarOrder& order, const Rational& c) {
    return monomial(order, Exps(order.size(), 0), c);
}

TruncSeries TruncSeries::monomial(const VarOrder& order, const Exps& e, const Rational& c) {
    if (c == 0) return zero(order);
    std::vector<Window> w;
    for (int x : e) w.push_back(Window{x, x, Trunc::Exact});
    TruncSeries s(order, std::move(w));
    s.terms_[e] = c;
    return s;
}

TruncSeries TruncSeries::univariate(const std::string& name, Window w,
                                    const std::map<int, Rational>& coeffs) {
    TruncSeries s(VarOrder({name}), {w});
    for (const auto& [e, c] : coeffs) s.set(Exps{e}, c);
    return s;
}

bool TruncSeries::known(const Exps& e) const {
    if (exact_zero_) return true;
    for (std::size_t v = 0; v < win_.size(); ++v)
        if (!in_known(win_[v], e[v])) return false;
    return true;
}

Rational TruncSeries::coeff(const Exps& e) const {
    if (e.size() != order_.size()) throw UsageError("exponent vector has wrong length");
    if (!known(e))
        throw TruncationError("coefficient " + exps_str(order_, e) + " lies outside the window");
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::set(const Exps& e, const Rational& c) {
    if (exact_zero_) throw UsageError("cannot write into the exact zero series");
    for (std::size_t v = 0; v < win_.size(); ++v)
        if (!in_support(win_[v], e[v]))
            throw UsageError("exponent " + exps_str(order_, e) + " outside declared support");
    if (!known(e)) return;
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void TruncSeries::add_to(const Exps& e, const Rational& c) {
    if (c == 0) return;
    Rational cur = 0;
    auto it = terms_.find(e);
    if (it != terms_.end()) cur = it->second;
    set(e, cur + c);
}

void TruncSeries::clip() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || !known(it->first))
            it = terms_.erase(it);
        else
            ++it;
    }
}

TruncSeries TruncSeries::truncated(std::size_t v, int lo, int hi) const {
    if (exact_zero_) return *this;
    TruncSeries r = *this;
    Window& w = r.win_[v];
    if (w.trunc == Trunc::Laurent) w.lo = std::max(w.lo, lo);
    else if (w.trunc == Trunc::Taylor) w.hi = std::min(w.hi, hi);
    r.clip();
    return r;
}

TruncSeries TruncSeries::with_windows(std::vector<Window> w) const {
    TruncSeries r(order_, std::move(w));
    for (const auto& [e, c] : terms_) r.set(e, c);
    return r;
}

TruncSeries TruncSeries::renamed(const VarOrder& order) const {
    if (order.size() != order_.size()) throw UsageError("rename changes variable count");
    TruncSeries r = *this;
    r.order_ = order;
    return r;
}

TruncSeries TruncSeries::embedded(const VarOrder& order) const {
    std::vector<std::size_t> pos;
    for (std::size_t v = 0; v < order_.size(); ++v) pos.push_back(order.index_of(order_.name(v)));
    if (exact_zero_) return zero(order);
    std::vector<Window> w(order.size(), Window{0, 0, Trunc::Exact});
    for (std::size_t v = 0; v < order_.size(); ++v) w[pos[v]] = win_[v];
    TruncSeries r(order, std::move(w));
    for (const auto& [e, c] : terms_) {
        Exps f(order.size(), 0);
        for (std::size_t v = 0; v < e.size(); ++v) f[pos[v]] = e[v];
        r.terms_[f] = c;
    }
    return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    if (order_ != o.order_) throw UsageError("series in different variable orders");
    if (exact_zero_) return o;
    if (o.exact_zero_) return *this;
    std::vector<Window> w;
    for (std::size_t v = 0; v < win_.size(); ++v) w.push_back(add_window(win_[v], o.win_[v]));
    TruncSeries r(order_, std::move(w));
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.terms_[e] += c;
    r.clip();
    return r;
}

TruncSeries TruncSeries::operator-() const { return scaled(Rational(-1)); }
TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::scaled(const Rational& c) const {
    if (exact_zero_) return *this;
    TruncSeries r = *this;
    if (c == 0) {
        r.terms_.clear();
        return r;
    }
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    if (order_ != o.order_) throw UsageError("series in different variable orders");
    if (exact_zero_ || o.exact_zero_) return zero(order_);
    std::vector<Window> w;
    for (std::size_t v = 0; v < win_.size(); ++v) w.push_back(mul_window(win_[v], o.win_[v]));
    TruncSeries r(order_, std::move(w));
    Exps e(order_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            bool ok = true;
            for (std::size_t v = 0; v < e.size(); ++v) {
                e[v] = ea[v] + eb[v];
                if (!in_known(r.win_[v], e[v])) {
                    ok = false;
                    break;
                }
            }
            if (ok) r.terms_[e] += ca * cb;
        }
    }
    r.clip();
    return r;
}

bool TruncSeries::equal_on_common(const TruncSeries& o) const { return (*this - o).is_zero(); }

bool TruncSeries::is_zero() const { return terms_.empty(); }

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) s << " + ";
        first = false;
        s << to_string(c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) s << '*' << order_.name(v) << '^' << e[v];
    }
    return s.str();
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

namespace {

// true if e dominates f in the iterated order (earlier variables decide).
bool dominates(const std::vector<Window>& w, const Exps& e, const Exps& f) {
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == f[v]) continue;
        if (w[v].trunc == Trunc::Taylor) return e[v] < f[v];
        return e[v] > f[v];
    }
    return false;
}

TruncSeries shift_exps(const TruncSeries& a, const Exps& d) {
    std::vector<Window> w = a.windows();
    for (std::size_t v = 0; v < w.size(); ++v) {
        w[v].lo += d[v];
        w[v].hi += d[v];
    }
    TruncSeries r(a.order(), std::move(w));
    Exps f(d.size());
    for (const auto& [e, c] : a.terms()) {
        for (std::size_t v = 0; v < d.size(); ++v) f[v] = e[v] + d[v];
        r.set(f, c);
    }
    return r;
}

}  // namespace

TruncSeries series_invert(const TruncSeries& a) {
    if (a.is_exact_zero() || a.terms().empty())
        throw SingularSeriesError("series has no known invertible leading term");
    const auto& w = a.windows();
    const Exps* lead = nullptr;
    for (const auto& [e, c] : a.terms())
        if (!lead || dominates(w, e, *lead)) lead = &e;
    Exps L = *lead;
    Rational c = a.terms().at(L);
    // Leading term must sit on the support bound, else unknown terms could dominate.
    for (std::size_t v = 0; v < w.size(); ++v) {
        if (w[v].trunc == Trunc::Laurent && L[v] != w[v].hi)
            throw SingularSeriesError("leading term below the support bound");
        if (w[v].trunc == Trunc::Taylor && L[v] != w[v].lo)
            throw SingularSeriesError("leading term above the support bound");
    }
    Exps negL(L.size());
    for (std::size_t v = 0; v < L.size(); ++v) negL[v] = -L[v];
    TruncSeries eps = shift_exps(a, negL).scaled(1 / c) - TruncSeries::constant(a.order(), 1);
    for (const auto& [e, x] : eps.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) {
            bool ok = (w[v].trunc == Trunc::Laurent && e[v] <= 0) ||
                      (w[v].trunc == Trunc::Taylor && e[v] >= 0) ||
                      (w[v].trunc == Trunc::Exact && e[v] == 0);
            if (!ok) throw SingularSeriesError("series is not a unit times a topologically nilpotent part");
        }
    }
    TruncSeries neg = -eps;
    TruncSeries sum = TruncSeries::constant(a.order(), 1) + TruncSeries(eps.order(), eps.windows());
    TruncSeries pw = TruncSeries::constant(a.order(), 1);
    for (int k = 0; k < 100000; ++k) {
        pw = pw * neg;
        if (pw.terms().empty()) break;
        sum = sum + pw;
    }
    return shift_exps(sum, negL).scaled(1 / c);
}

TruncSeries series_shift(const TruncSeries& a, const std::string& var, const Rational& offset) {
    std::size_t v = a.order().index_of(var);
    if (offset == 0 || a.is_exact_zero()) return a;
    const Window& w = a.window(v);
    TruncSeries r(a.order(), a.windows());
    for (const auto& [e, c] : a.terms()) {
        int n = e[v];
        if (w.trunc == Trunc::Taylor)
            throw TruncationError("shifting a Taylor-truncated variable " + var +
                                  " needs coefficients above exponent " + std::to_string(w.hi));
        if (n < 0 && w.trunc == Trunc::Exact)
            throw TruncationError("shift of negative power in untruncated variable " + var);
        int kmax = n >= 0 ? n : n - w.lo;
        Exps f = e;
        Rational apow = 1;
        for (int k = 0; k <= kmax; ++k) {
            f[v] = n - k;
            r.add_to(f, c * binomial(Rational(n), k) * apow);
            apow *= offset;
        }
    }
    return r;
}

TruncSeries series_shift(const TruncSeries& a, const std::string& var, const TruncSeries& offset) {
    if (offset.order() != a.order()) throw UsageError("offset in a different variable order");
    std::size_t v = a.order().index_of(var);
    if (!offset.is_exact_zero()) {
        for (std::size_t u = 0; u <= v; ++u) {
            const Window& ow = offset.window(u);
            if (!(ow.trunc == Trunc::Exact && ow.lo == 0 && ow.hi == 0))
                throw UsageError("offset must depend only on variables after " + var);
        }
    }
    if (a.is_exact_zero()) return a;
    const Window& w = a.window(v);
    TruncSeries r(a.order(), a.windows());
    std::vector<TruncSeries> pows{TruncSeries::constant(a.order(), 1)};
    for (const auto& [e, c] : a.terms()) {
        int n = e[v];
        if (w.trunc == Trunc::Taylor && !offset.is_exact_zero())
            throw TruncationError("shifting a Taylor-truncated variable " + var +
                                  " needs coefficients above exponent " + std::to_string(w.hi));
        if (n < 0 && w.trunc == Trunc::Exact && !offset.is_exact_zero())
            throw TruncationError("shift of negative power in untruncated variable " + var);
        int kmax = n >= 0 ? n : n - w.lo;
        if (offset.is_exact_zero()) kmax = 0;
        while (static_cast<int>(pows.size()) <= kmax) pows.push_back(pows.back() * offset);
        for (int k = 0; k <= kmax; ++k) {
            Exps f = e;
            f[v] = n - k;
            r = r + TruncSeries::monomial(a.order(), f, c * binomial(Rational(n), k)) * pows[k];
        }
    }
    return r;
}

TruncSeries expand_difference(const TruncSeries& f, const VarOrder& order, std::size_t first,
                              std::size_t second, const Rational& shift, int second_hi) {
    if (f.order().size() != 1) throw UsageError("expand_difference expects a univariate series");
    if (f.is_exact_zero()) return TruncSeries::zero(order);
    const Window& fw = f.window(0);
    if (fw.trunc == Trunc::Taylor) throw UsageError("expand_difference expects a Laurent series");
    std::vector<Window> w(order.size(), Window{0, 0, Trunc::Exact});
    int lo = fw.trunc == Trunc::Laurent ? fw.lo : std::min(fw.lo, 0);
    w[first] = Window{lo, fw.hi, Trunc::Laurent};
    w[second] = Window{0, second_hi, Trunc::Taylor};
    TruncSeries r(order, w);
    Exps e(order.size(), 0);
    for (const auto& [ex, c] : f.terms()) {
        int n = ex[0];
        if (n < 0 && fw.trunc == Trunc::Exact)
            throw UsageError("negative powers need a Laurent window in expand_difference");
        int kmax = n >= 0 ? n : n - lo;
        for (int k = 0; k <= kmax; ++k) {
            Rational ck = c * binomial(Rational(n), k);
            // (shift - y)^k = sum_j C(k,j) shift^{k-j} (-y)^j
            for (int j = 0; j <= std::min(k, second_hi); ++j) {
                Rational t = ck * Rational(binomial(static_cast<long>(k), static_cast<long>(j)));
                Rational sp = 1;
                for (int q = 0; q < k - j; ++q) sp *= shift;
                t *= sp;
                if (j % 2) t = -t;
                if (t == 0) continue;
                e[first] = n - k;
                e[second] = j;
                r.add_to(e, t);
            }
        }
    }
    return r;
}

TruncSeries compute_g(int N, int K, const std::string& var) {
    if (N < 1 || K < 1) throw UsageError("compute_g needs N >= 1 and K >= 1");
    std::vector<Rational> g(K + 1);
    g[0] = 1;
    Rational NN(N);
    // Coefficient of u^{-k} in g(u+N) - g(u) + u^{-2} g(u) = 0 fixes g_{k-1}.
    for (int k = 2; k <= K + 1; ++k) {
        Rational s = g[k - 2];
        std::vector<Rational> np(k + 1);
        np[0] = 1;
        for (int i = 1; i <= k; ++i) np[i] = np[i - 1] * NN;
        for (int j = 0; j < k - 1; ++j) s += g[j] * binomial(Rational(-j), k - j) * np[k - j];
        g[k - 1] = s / (Rational(k - 1) * NN);
    }
    std::map<int, Rational> c;
    for (int k = 0; k <= K; ++k) c[-k] = g[k];
    return TruncSeries::univariate(var, Window{-K, 0, Trunc::Laurent}, c);
}

}  // namespace ycl
