#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ycl/errors.hpp"
#include "ycl/scalars.hpp"

namespace ycl {

template <class S>
struct ScalarTraits {
    static bool is_zero(const S& x) { return x == 0; }
};

template <>
struct ScalarTraits<RatFunc> {
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
};

// A series entry is dropped only when it is exactly zero; a windowed zero
// still carries truncation information.
template <>
struct ScalarTraits<TruncSeries> {
    static bool is_zero(const TruncSeries& x) { return x.is_exact_zero(); }
};

using MultiIndex = std::vector<int>;

// Sparse operator on (C^N)^{tensor m}. Multi-indices are 0-based digits,
// packed with leg 1 most significant. Absent entries are ring zero.
template <class S>
class TensorOp {
public:
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    TensorOp() = default;
    TensorOp(int N, int m) : N_(N), m_(m) {
        if (N < 1 || m < 0) throw UsageError("TensorOp needs N >= 1 and m >= 0");
        dim_ = 1;
        for (int i = 0; i < m; ++i) dim_ *= static_cast<std::uint64_t>(N);
    }

    static TensorOp identity(int N, int m, const S& one) {
        TensorOp r(N, m);
        for (std::uint64_t i = 0; i < r.dim_; ++i) r.e_.emplace(Key{i, i}, one);
        return r;
    }

    int N() const { return N_; }
    int legs() const { return m_; }
    std::uint64_t dim() const { return dim_; }
    const std::map<Key, S>& entries() const { return e_; }
    std::size_t nonzeros() const { return e_.size(); }

    std::uint64_t pack(const MultiIndex& a) const {
        if (static_cast<int>(a.size()) != m_) throw UsageError("multi-index length mismatch");
        std::uint64_t k = 0;
        for (int x : a) {
            if (x < 0 || x >= N_) throw UsageError("multi-index component out of range");
            k = k * N_ + x;
        }
        return k;
    }
    MultiIndex unpack(std::uint64_t k) const {
        MultiIndex a(m_);
        for (int q = m_ - 1; q >= 0; --q) {
            a[q] = static_cast<int>(k % N_);
            k /= N_;
        }
        return a;
    }

    const S* find(std::uint64_t row, std::uint64_t col) const {
        auto it = e_.find(Key{row, col});
        return it == e_.end() ? nullptr : &it->second;
    }
    void set(std::uint64_t row, std::uint64_t col, const S& v) {
        if (ScalarTraits<S>::is_zero(v))
            e_.erase(Key{row, col});
        else
            e_[Key{row, col}] = v;
    }
    void add(std::uint64_t row, std::uint64_t col, const S& v) {
        auto it = e_.find(Key{row, col});
        if (it == e_.end()) {
            if (!ScalarTraits<S>::is_zero(v)) e_.emplace(Key{row, col}, v);
            return;
        }
        it->second = it->second + v;
        if (ScalarTraits<S>::is_zero(it->second)) e_.erase(it);
    }

    TensorOp operator+(const TensorOp& o) const {
        check_shape(o);
        TensorOp r = *this;
        for (const auto& [k, v] : o.e_) r.add(k.first, k.second, v);
        return r;
    }
    TensorOp operator-() const {
        TensorOp r(N_, m_);
        for (const auto& [k, v] : e_) r.e_.emplace(k, -v);
        return r;
    }
    TensorOp operator-(const TensorOp& o) const { return *this + (-o); }

    TensorOp operator*(const TensorOp& o) const {
        check_shape(o);
        std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, const S*>>> rows;
        for (const auto& [k, v] : o.e_) rows[k.first].push_back({k.second, &v});
        TensorOp r(N_, m_);
        for (const auto& [k, v] : e_) {
            auto it = rows.find(k.second);
            if (it == rows.end()) continue;
            for (const auto& [col, w] : it->second) r.add(k.first, col, v * (*w));
        }
        return r;
    }

    TensorOp scaled(const S& c) const {
        TensorOp r(N_, m_);
        for (const auto& [k, v] : e_) r.set(k.first, k.second, v * c);
        return r;
    }

    template <class T, class F>
    TensorOp<T> map(F f) const {
        TensorOp<T> r(N_, m_);
        for (const auto& [k, v] : e_) r.set(k.first, k.second, f(v));
        return r;
    }

    bool operator==(const TensorOp& o) const {
        return N_ == o.N_ && m_ == o.m_ && e_ == o.e_;
    }

private:
    void check_shape(const TensorOp& o) const {
        if (N_ != o.N_ || m_ != o.m_) throw UsageError("TensorOp shape mismatch");
    }
    int N_ = 1;
    int m_ = 0;
    std::uint64_t dim_ = 1;
    std::map<Key, S> e_;
};

using RatOp = TensorOp<Rational>;
using RatFuncOp = TensorOp<RatFunc>;
using SeriesOp = TensorOp<TruncSeries>;

namespace detail {
inline void check_legs(const std::vector<int>& legs, int m) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (legs[i] < 1 || legs[i] > m) throw UsageError("leg label out of range");
        for (std::size_t j = i + 1; j < legs.size(); ++j)
            if (legs[i] == legs[j]) throw UsageError("repeated leg label");
    }
}
}  // namespace detail

// op acts on the listed legs (1-based, in order), identity elsewhere.
template <class S>
TensorOp<S> leg_embed(const TensorOp<S>& op, const std::vector<int>& legs, int m) {
    if (static_cast<int>(legs.size()) != op.legs() || op.legs() > m)
        throw UsageError("leg_embed: leg count mismatch");
    detail::check_legs(legs, m);
    TensorOp<S> r(op.N(), m);
    std::vector<int> rest;
    for (int q = 1; q <= m; ++q) {
        bool used = false;
        for (int l : legs) used |= (l == q);
        if (!used) rest.push_back(q);
    }
    std::uint64_t rest_dim = 1;
    for (std::size_t i = 0; i < rest.size(); ++i) rest_dim *= op.N();
    MultiIndex ra(m), ca(m);
    for (const auto& [k, v] : op.entries()) {
        MultiIndex a = op.unpack(k.first), b = op.unpack(k.second);
        for (std::uint64_t s = 0; s < rest_dim; ++s) {
            std::uint64_t t = s;
            for (int i = static_cast<int>(rest.size()) - 1; i >= 0; --i) {
                ra[rest[i] - 1] = ca[rest[i] - 1] = static_cast<int>(t % op.N());
                t /= op.N();
            }
            for (std::size_t i = 0; i < legs.size(); ++i) {
                ra[legs[i] - 1] = a[i];
                ca[legs[i] - 1] = b[i];
            }
            r.set(r.pack(ra), r.pack(ca), v);
        }
    }
    return r;
}

// Operator permuting tensor factors: sends e_{a_1} x ... x e_{a_m} to the
// vector whose factor perm[q] is a_q (perm is 0-based, a bijection of 0..m-1).
template <class S>
TensorOp<S> leg_permutation(int N, const std::vector<int>& perm, const S& one) {
    int m = static_cast<int>(perm.size());
    TensorOp<S> r(N, m);
    for (std::uint64_t k = 0; k < r.dim(); ++k) {
        MultiIndex a = r.unpack(k), b(m);
        for (int q = 0; q < m; ++q) b[perm[q]] = a[q];
        r.set(r.pack(b), k, one);
    }
    return r;
}

// P_ab on m legs (1-based labels).
template <class S>
TensorOp<S> permutation_op(int N, int m, int a, int b, const S& one) {
    if (a == b) throw UsageError("permutation_op needs distinct legs");
    detail::check_legs({a, b}, m);
    std::vector<int> perm(m);
    for (int q = 0; q < m; ++q) perm[q] = q;
    std::swap(perm[a - 1], perm[b - 1]);
    return leg_permutation<S>(N, perm, one);
}

template <class S>
TensorOp<S> partial_transpose(const TensorOp<S>& op, int leg) {
    detail::check_legs({leg}, op.legs());
    TensorOp<S> r(op.N(), op.legs());
    for (const auto& [k, v] : op.entries()) {
        MultiIndex a = op.unpack(k.first), b = op.unpack(k.second);
        std::swap(a[leg - 1], b[leg - 1]);
        r.set(r.pack(a), r.pack(b), v);
    }
    return r;
}

// Trace over the listed legs; the result acts on the remaining legs in order.
template <class S>
TensorOp<S> partial_trace(const TensorOp<S>& op, const std::vector<int>& legs) {
    detail::check_legs(legs, op.legs());
    std::vector<int> keep;
    for (int q = 1; q <= op.legs(); ++q) {
        bool traced = false;
        for (int l : legs) traced |= (l == q);
        if (!traced) keep.push_back(q);
    }
    TensorOp<S> r(op.N(), static_cast<int>(keep.size()));
    for (const auto& [k, v] : op.entries()) {
        MultiIndex a = op.unpack(k.first), b = op.unpack(k.second);
        bool diag = true;
        for (int l : legs) diag &= (a[l - 1] == b[l - 1]);
        if (!diag) continue;
        MultiIndex ra, cb;
        for (int q : keep) {
            ra.push_back(a[q - 1]);
            cb.push_back(b[q - 1]);
        }
        r.add(r.pack(ra), r.pack(cb), v);
    }
    return r;
}

// Full trace as a scalar (zero if no entries on the diagonal).
template <class S>
S full_trace(const TensorOp<S>& op, const S& zero) {
    S s = zero;
    for (const auto& [k, v] : op.entries())
        if (k.first == k.second) s = s + v;
    return s;
}

// Matrix unit e_ij on one leg (0-based i, j).
template <class S>
TensorOp<S> matrix_unit(int N, int i, int j, const S& one) {
    TensorOp<S> r(N, 1);
    r.set(i, j, one);
    return r;
}

// Kronecker product: legs of a come first.
template <class S>
TensorOp<S> kron(const TensorOp<S>& a, const TensorOp<S>& b) {
    if (a.N() != b.N()) throw UsageError("kron: local dimension mismatch");
    TensorOp<S> r(a.N(), a.legs() + b.legs());
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries())
            r.set(ka.first * b.dim() + kb.first, ka.second * b.dim() + kb.second, va * vb);
    return r;
}

RatOp to_rational_op(const RatFuncOp& op, const Rational& at);
RatFuncOp to_ratfunc_op(const RatOp& op);
SeriesOp to_series_op(const RatOp& op, const VarOrder& order);

// R_ab(x + shift) = 1 - P_ab (x + shift)^{-1} over rational functions in x.
RatFuncOp yang_r(int N, int m, int a, int b, const Rational& shift);
// R_ab at a rational point; UsageError at the pole.
RatOp yang_r_at(int N, int m, int a, int b, const Rational& u);
// arg - P_ab, the polynomial numerator of R_ab(arg) = (arg - P_ab) / arg.
SeriesOp yang_r_numerator(int N, int m, int a, int b, const TruncSeries& arg);
// 1 - P_ab * inv, where inv is a series standing for the argument's inverse.
SeriesOp yang_r_series(int N, int m, int a, int b, const TruncSeries& inv);

// Univariate expansions in the variable "u" up to order K:
// R-bar_ab(sign*u + shift) = g(sign*u + shift) (1 - P_ab/(sign*u + shift)).
SeriesOp rbar(int N, int m, int a, int b, int sign, const Rational& shift, int K);
// The scalar g(sign*u + shift) and (sign*u + shift)^{-1} as u-series.
TruncSeries g_at(int N, int sign, const Rational& shift, int K);
TruncSeries inverse_linear(int sign, const Rational& shift, int K);

// Inverse of an operator with series entries, X = s (1 - Y) with s a scalar
// unit and Y strictly subleading. Throws SingularSeriesError otherwise.
SeriesOp series_op_invert(const SeriesOp& x, const TruncSeries& s);

bool series_op_equal(const SeriesOp& a, const SeriesOp& b);
bool series_op_is_identity(const SeriesOp& a);

}  // namespace ycl
