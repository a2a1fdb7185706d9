#include "ycl/diffop.hpp"

#include <sstream>

#include "ycl/fusion.hpp"

namespace ycl {

UPoly UPoly::constant(const Element& c) {
    UPoly p;
    p.add(0, c);
    return p;
}

Element UPoly::coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Element() : it->second;
}

void UPoly::add(int k, const Element& x, const Rational& scale) {
    if (x.is_zero() || scale == 0) return;
    Element& slot = c_[k];
    slot.add_scaled(x, scale);
    if (slot.is_zero()) c_.erase(k);
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r = *this;
    for (const auto& [k, x] : o.c_) r.add(k, x);
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r = *this;
    for (const auto& [k, x] : o.c_) r.add(k, x, -1);
    return r;
}

UPoly UPoly::scaled(const Rational& s) const {
    UPoly r;
    for (const auto& [k, x] : c_) r.add(k, x, s);
    return r;
}

ShiftOperator ShiftOperator::coefficient(const UPoly& a, int power) {
    ShiftOperator r;
    r.add(power, a);
    return r;
}

ShiftOperator ShiftOperator::scalar(const Rational& c) {
    return coefficient(UPoly::constant(Element::scalar(c)));
}

UPoly ShiftOperator::coeff(int power) const {
    auto it = t_.find(power);
    return it == t_.end() ? UPoly() : it->second;
}

void ShiftOperator::add(int power, const UPoly& a) {
    if (a.is_zero()) return;
    UPoly& slot = t_[power];
    slot = slot + a;
    if (slot.is_zero()) t_.erase(power);
}

ShiftOperator ShiftOperator::operator+(const ShiftOperator& o) const {
    ShiftOperator r = *this;
    for (const auto& [k, a] : o.t_) r.add(k, a);
    return r;
}

ShiftOperator ShiftOperator::operator-(const ShiftOperator& o) const {
    ShiftOperator r = *this;
    for (const auto& [k, a] : o.t_) r.add(k, a.scaled(-1));
    return r;
}

ShiftOperator ShiftOperator::scaled(const Rational& s) const {
    ShiftOperator r;
    for (const auto& [k, a] : t_) r.add(k, a.scaled(s));
    return r;
}

OperatorAlgebra::OperatorAlgebra(PBWEngine& A, OpFlavor flavor, Rational step)
    : A_(&A), flavor_(flavor), step_(std::move(step)) {}

UPoly OperatorAlgebra::mul(const UPoly& a, const UPoly& b) const {
    UPoly r;
    for (const auto& [i, x] : a.coeffs())
        for (const auto& [j, y] : b.coeffs()) r.add(i + j, A_->mul(x, y));
    return r;
}

UPoly OperatorAlgebra::shifted(const UPoly& a, const Rational& t) {
    if (t == 0) return a;
    UPoly r;
    for (const auto& [n, x] : a.coeffs()) {
        Rational tp = 1;
        for (int j = n; j >= 0; --j) {
            r.add(j, x, Rational(binomial(static_cast<long>(n), static_cast<long>(j))) * tp);
            tp *= t;
        }
    }
    return r;
}

UPoly OperatorAlgebra::derivative(const UPoly& a) {
    UPoly r;
    for (const auto& [n, x] : a.coeffs())
        if (n > 0) r.add(n - 1, x, n);
    return r;
}

ShiftOperator OperatorAlgebra::mul(const ShiftOperator& a, const ShiftOperator& b) const {
    ShiftOperator r;
    for (const auto& [k, x] : a.terms()) {
        for (const auto& [l, y] : b.terms()) {
            if (flavor_ == OpFlavor::Shift) {
                r.add(k + l, mul(x, shifted(y, -step_ * k)));
                continue;
            }
            // d^k y = sum_j C(k, j) y^{(j)} d^{k-j}
            UPoly dy = y;
            for (int j = 0; j <= k && !dy.is_zero(); ++j) {
                r.add(k - j + l, mul(x, dy).scaled(Rational(binomial(static_cast<long>(k), static_cast<long>(j)))));
                dy = derivative(dy);
            }
        }
    }
    return r;
}

ShiftOperator OperatorAlgebra::commutator(const ShiftOperator& a, const ShiftOperator& b) const {
    return mul(a, b) - mul(b, a);
}

std::string OperatorAlgebra::str(const ShiftOperator& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream s;
    const char* X = flavor_ == OpFlavor::Shift ? "S" : "d";
    bool first = true;
    for (const auto& [k, a] : x.terms())
        for (const auto& [n, c] : a.coeffs()) {
            if (!first) s << " + ";
            first = false;
            s << '[' << A_->str(c) << "] u^" << n << ' ' << X << '^' << k;
        }
    return s.str();
}

ShiftOperator tensor_trace(const OperatorAlgebra& alg, const RatOp& E, const std::vector<OpMatrix>& legs) {
    const int m = E.legs();
    if (static_cast<int>(legs.size()) != m) throw UsageError("tensor_trace: one matrix per leg");
    ShiftOperator total;
    if (m == 0) {
        if (const Rational* v = E.find(0, 0)) total = ShiftOperator::scalar(*v);
        return total;
    }
    // prefix products keyed by (i1, j1, ..., ik, jk)
    std::map<std::vector<int>, ShiftOperator> memo;
    auto product = [&](const MultiIndex& I, const MultiIndex& J) {
        std::vector<int> key;
        ShiftOperator acc = legs[0][I[0]][J[0]];
        key = {I[0], J[0]};
        for (int q = 1; q < m && !acc.is_zero(); ++q) {
            key.push_back(I[q]);
            key.push_back(J[q]);
            auto it = memo.find(key);
            if (it != memo.end()) {
                acc = it->second;
                continue;
            }
            acc = alg.mul(acc, legs[q][I[q]][J[q]]);
            memo.emplace(key, acc);
        }
        return acc;
    };
    for (const auto& [key, v] : E.entries()) {
        MultiIndex J = E.unpack(key.first), I = E.unpack(key.second);
        total = total + product(I, J).scaled(v);
    }
    return total;
}

ShiftOperator antisymmetrized_trace(const OperatorAlgebra& alg, const OpMatrix& M, int m) {
    const int N = static_cast<int>(M.size());
    return tensor_trace(alg, antisymmetrizer(m, N), std::vector<OpMatrix>(m, M));
}

ShiftOperator symmetrized_trace(const OperatorAlgebra& alg, const OpMatrix& M, int m) {
    const int N = static_cast<int>(M.size());
    return tensor_trace(alg, symmetrizer(m, N), std::vector<OpMatrix>(m, M));
}

ShiftOperator power_trace(const OperatorAlgebra& alg, const OpMatrix& M, int k) {
    const int N = static_cast<int>(M.size());
    if (k == 0) return ShiftOperator::scalar(N);
    // P[i][j] = (M^q)_{ij}
    OpMatrix P = M;
    for (int q = 1; q < k; ++q) {
        OpMatrix next(N, std::vector<ShiftOperator>(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int a = 0; a < N; ++a) next[i][j] = next[i][j] + alg.mul(P[i][a], M[a][j]);
        P = std::move(next);
    }
    ShiftOperator tr;
    for (int i = 0; i < N; ++i) tr = tr + P[i][i];
    return tr;
}

std::vector<ShiftOperator> cdet_coefficients(const OperatorAlgebra& alg, const OpMatrix& M) {
    std::vector<ShiftOperator> c;
    for (int m = 0; m <= static_cast<int>(M.size()); ++m) c.push_back(antisymmetrized_trace(alg, M, m));
    return c;
}

namespace {
IdentityReport compare(IdentityReport r, int degree, const ShiftOperator& lhs, const ShiftOperator& rhs) {
    if (r.ok && !(lhs == rhs)) {
        r.ok = false;
        r.mismatch = "z-degree " + std::to_string(degree);
    }
    ++r.degrees_checked;
    return r;
}
}  // namespace

IdentityReport newton_check(const OperatorAlgebra& alg, const OpMatrix& M, int m_max) {
    const int N = static_cast<int>(M.size());
    std::vector<ShiftOperator> c(m_max + 2), p(m_max + 2);
    for (int m = 0; m <= m_max + 1; ++m) {
        if (m <= N) c[m] = antisymmetrized_trace(alg, M, m);
        if (m >= 1) p[m] = power_trace(alg, M, m);
    }
    IdentityReport r;
    // (n+1) c_{n+1} = sum_{a+b=n} c_a (-1)^b p_{b+1}
    for (int n = 0; n <= m_max; ++n) {
        ShiftOperator rhs;
        for (int a = 0; a <= n; ++a) {
            int b = n - a;
            rhs = rhs + alg.mul(c[a], p[b + 1]).scaled(b % 2 ? -1 : 1);
        }
        r = compare(r, n, c[n + 1].scaled(n + 1), rhs);
    }
    return r;
}

IdentityReport macmahon_check(const OperatorAlgebra& alg, const OpMatrix& M, int m_max) {
    const int N = static_cast<int>(M.size());
    std::vector<ShiftOperator> q(m_max + 1), b(m_max + 1);
    for (int m = 0; m <= std::min(m_max, N); ++m) q[m] = antisymmetrized_trace(alg, M, m).scaled(m % 2 ? -1 : 1);
    IdentityReport r;
    b[0] = ShiftOperator::scalar(1);
    r = compare(r, 0, b[0], symmetrized_trace(alg, M, 0));
    for (int n = 1; n <= m_max; ++n) {
        for (int m = 1; m <= n; ++m) b[n] = b[n] - alg.mul(q[m], b[n - m]);
        r = compare(r, n, b[n], symmetrized_trace(alg, M, n));
    }
    return r;
}

IdentityReport manin_check(const OperatorAlgebra& alg, const OpMatrix& M) {
    const int N = static_cast<int>(M.size());
    IdentityReport r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    ShiftOperator lhs = alg.commutator(M[i][j], M[k][l]);
                    ShiftOperator rhs = alg.commutator(M[k][j], M[i][l]);
                    if (r.ok && !(lhs == rhs)) {
                        r.ok = false;
                        r.mismatch = "indices " + std::to_string(i + 1) + std::to_string(j + 1) +
                                     std::to_string(k + 1) + std::to_string(l + 1);
                    }
                    ++r.degrees_checked;
                }
    return r;
}

UPoly t_plus_poly(const DoubleYangian& Y, int i, int j) {
    if (!Y.cap()) throw UsageError("t_plus_poly needs a weight cap");
    UPoly p;
    if (i == j) p.add(0, Element::scalar(1));
    // t+(u) = 1 - sum_{s>=1} t^(-s) u^{s-1}
    for (int s = 1; s <= *Y.cap(); ++s) p.add(s - 1, Element::monomial({DoubleYangian::t(i, j, -s)}), -1);
    return p;
}

OpMatrix dual_yangian_matrix(const DoubleYangian& Y) {
    const int N = Y.N();
    OpMatrix M(N, std::vector<ShiftOperator>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) M[i][j] = ShiftOperator::coefficient(t_plus_poly(Y, i + 1, j + 1), 1);
    return M;
}

UPoly e_plus_poly(const LoopEngine& U, int i, int j) {
    if (!U.cap()) throw UsageError("e_plus_poly needs a weight cap");
    UPoly p;
    for (int r = 1; r <= *U.cap(); ++r) p.add(r - 1, Element::monomial({LoopEngine::E(i, j, -r)}));
    return p;
}

OpMatrix classical_matrix(const LoopEngine& U) {
    const int N = U.N();
    OpMatrix M(N, std::vector<ShiftOperator>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            M[i][j] = ShiftOperator::coefficient(e_plus_poly(U, i + 1, j + 1));
            if (i == j) M[i][j].add(1, UPoly::constant(Element::scalar(1)));
        }
    return M;
}

}  // namespace ycl
