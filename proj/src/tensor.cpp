#include "ycl/tensor.hpp"

namespace ycl {

RatOp to_rational_op(const RatFuncOp& op, const Rational& at) {
    return op.map<Rational>([&](const RatFunc& f) { return f.eval(at); });
}

RatFuncOp to_ratfunc_op(const RatOp& op) {
    return op.map<RatFunc>([](const Rational& c) { return RatFunc(c); });
}

SeriesOp to_series_op(const RatOp& op, const VarOrder& order) {
    return op.map<TruncSeries>([&](const Rational& c) { return TruncSeries::constant(order, c); });
}

RatFuncOp yang_r(int N, int m, int a, int b, const Rational& shift) {
    RatFunc inv = RatFunc(1) / (RatFunc::x() + RatFunc(shift));
    return RatFuncOp::identity(N, m, RatFunc(1)) - permutation_op<RatFunc>(N, m, a, b, inv);
}

RatOp yang_r_at(int N, int m, int a, int b, const Rational& u) {
    if (u == 0) throw UsageError("R-matrix evaluated at its pole u = 0");
    return RatOp::identity(N, m, Rational(1)) - permutation_op<Rational>(N, m, a, b, 1 / u);
}

SeriesOp yang_r_numerator(int N, int m, int a, int b, const TruncSeries& arg) {
    TruncSeries one = TruncSeries::constant(arg.order(), 1);
    return SeriesOp::identity(N, m, arg) - permutation_op<TruncSeries>(N, m, a, b, one);
}

SeriesOp yang_r_series(int N, int m, int a, int b, const TruncSeries& inv) {
    TruncSeries one = TruncSeries::constant(inv.order(), 1);
    return SeriesOp::identity(N, m, one) - permutation_op<TruncSeries>(N, m, a, b, inv);
}

TruncSeries g_at(int N, int sign, const Rational& shift, int K) {
    TruncSeries g = compute_g(N, K);
    if (sign == 1) return series_shift(g, "u", shift);
    if (sign != -1) throw UsageError("sign must be +1 or -1");
    TruncSeries r(g.order(), g.windows());
    for (const auto& [e, c] : g.terms()) r.set(e, (e[0] % 2) ? Rational(-c) : c);
    return series_shift(r, "u", -shift);
}

TruncSeries inverse_linear(int sign, const Rational& shift, int K) {
    if (sign != 1 && sign != -1) throw UsageError("sign must be +1 or -1");
    TruncSeries inv = TruncSeries::univariate("u", Window{-K, -1, Trunc::Laurent}, {{-1, 1}});
    return series_shift(inv, "u", Rational(sign) * shift).scaled(Rational(sign));
}

SeriesOp rbar(int N, int m, int a, int b, int sign, const Rational& shift, int K) {
    TruncSeries g = g_at(N, sign, shift, K);
    SeriesOp r = yang_r_series(N, m, a, b, inverse_linear(sign, shift, K));
    return r.scaled(g);
}

SeriesOp series_op_invert(const SeriesOp& x, const TruncSeries& s) {
    TruncSeries sinv = series_invert(s);
    TruncSeries one = TruncSeries::constant(s.order(), 1);
    SeriesOp id = SeriesOp::identity(x.N(), x.legs(), one);
    SeriesOp y = id - x.scaled(sinv);
    SeriesOp sum = id;
    SeriesOp pw = id;
    for (int k = 0; k < 10000; ++k) {
        pw = pw * y;
        bool empty = true;
        for (const auto& [key, v] : pw.entries()) empty &= v.terms().empty();
        if (empty) return sum.scaled(sinv);
        sum = sum + pw;
    }
    throw SingularSeriesError("Neumann series for operator inverse did not terminate");
}

bool series_op_equal(const SeriesOp& a, const SeriesOp& b) {
    SeriesOp d = a - b;
    for (const auto& [k, v] : d.entries())
        if (!v.is_zero()) return false;
    return true;
}

bool series_op_is_identity(const SeriesOp& a) {
    if (a.entries().empty()) return false;
    const VarOrder& o = a.entries().begin()->second.order();
    return series_op_equal(a, SeriesOp::identity(a.N(), a.legs(), TruncSeries::constant(o, 1)));
}

}  // namespace ycl
