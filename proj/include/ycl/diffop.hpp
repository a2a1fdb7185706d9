#pragma once

#include <map>
#include <string>
#include <vector>

#include "ycl/pbw.hpp"
#include "ycl/tensor.hpp"
#include "ycl/yangian.hpp"

namespace ycl {

// Polynomial in the central variable u with algebra coefficients.
class UPoly {
public:
    UPoly() = default;
    static UPoly constant(const Element& c);
    const std::map<int, Element>& coeffs() const { return c_; }
    Element coeff(int k) const;
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    bool is_zero() const { return c_.empty(); }
    void add(int k, const Element& x, const Rational& scale = 1);
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly scaled(const Rational& s) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

private:
    std::map<int, Element> c_;
};

// Finite sum sum_k a_k(u) X^k where X is the shift u -> u - step or the
// derivation d/du. Normal form keeps X to the right of the coefficients.
class ShiftOperator {
public:
    ShiftOperator() = default;
    static ShiftOperator coefficient(const UPoly& a, int power = 0);
    static ShiftOperator scalar(const Rational& c);
    const std::map<int, UPoly>& terms() const { return t_; }
    UPoly coeff(int power) const;
    bool is_zero() const { return t_.empty(); }
    void add(int power, const UPoly& a);
    ShiftOperator operator+(const ShiftOperator& o) const;
    ShiftOperator operator-(const ShiftOperator& o) const;
    ShiftOperator scaled(const Rational& s) const;
    bool operator==(const ShiftOperator& o) const { return t_ == o.t_; }

private:
    std::map<int, UPoly> t_;
};

enum class OpFlavor { Shift, Derivation };

// Multiplication of shift or differential operators over one coefficient algebra:
// X a(u) = a(u - step) X for shifts, d a(u) = a(u) d + a'(u) for derivations.
class OperatorAlgebra {
public:
    OperatorAlgebra(PBWEngine& A, OpFlavor flavor, Rational step = 1);
    PBWEngine& algebra() const { return *A_; }
    OpFlavor flavor() const { return flavor_; }

    UPoly mul(const UPoly& a, const UPoly& b) const;
    ShiftOperator mul(const ShiftOperator& a, const ShiftOperator& b) const;
    ShiftOperator commutator(const ShiftOperator& a, const ShiftOperator& b) const;
    // a(u + t)
    static UPoly shifted(const UPoly& a, const Rational& t);
    static UPoly derivative(const UPoly& a);
    std::string str(const ShiftOperator& x) const;

private:
    PBWEngine* A_;
    OpFlavor flavor_;
    Rational step_;
};

using OpMatrix = std::vector<std::vector<ShiftOperator>>;

// tr E X_1...X_m = sum E_{J,I} (X_1)_{i1 j1}...(X_m)_{im jm}, one matrix per leg.
ShiftOperator tensor_trace(const OperatorAlgebra& alg, const RatOp& E, const std::vector<OpMatrix>& legs);

// tr A^(m) M_1...M_m, tr H^(m) M_1...M_m and tr M^k for an N x N operator matrix.
ShiftOperator antisymmetrized_trace(const OperatorAlgebra& alg, const OpMatrix& M, int m);
ShiftOperator symmetrized_trace(const OperatorAlgebra& alg, const OpMatrix& M, int m);
ShiftOperator power_trace(const OperatorAlgebra& alg, const OpMatrix& M, int k);

// Coefficients of cdet(1 + zM) = sum_m z^m tr A^(m) M_1...M_m, m = 0..N.
std::vector<ShiftOperator> cdet_coefficients(const OperatorAlgebra& alg, const OpMatrix& M);

struct IdentityReport {
    bool ok = true;
    int degrees_checked = 0;
    // empty when ok; otherwise names the first z-degree whose sides differ
    std::string mismatch;
};

// d/dz cdet(1 + zM) = cdet(1 + zM) sum_m (-z)^m tr M^{m+1}, z-degrees 0..m_max.
IdentityReport newton_check(const OperatorAlgebra& alg, const OpMatrix& M, int m_max);
// [cdet(1 - zM)]^{-1} = sum_m z^m tr H^(m) M_1...M_m, z-degrees 0..m_max.
IdentityReport macmahon_check(const OperatorAlgebra& alg, const OpMatrix& M, int m_max);
// [M_ij, M_kl] = [M_kj, M_il] for all index quadruples.
IdentityReport manin_check(const OperatorAlgebra& alg, const OpMatrix& M);

// t+_ij(u) as a polynomial modulo the weight cap of Y.
UPoly t_plus_poly(const DoubleYangian& Y, int i, int j);
// M = T+(u) X with X the shift u -> u - step.
OpMatrix dual_yangian_matrix(const DoubleYangian& Y);
// E+(u) = sum_r E[-r] u^{r-1}, modulo the weight cap of U.
UPoly e_plus_poly(const LoopEngine& U, int i, int j);
// M = d/du + E+(u).
OpMatrix classical_matrix(const LoopEngine& U);

}  // namespace ycl
