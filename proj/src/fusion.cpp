#include "ycl/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ycl {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw UsageError("diagram parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("diagram parts must weakly decrease");
    }
}

int YoungDiagram::boxes() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int YoungDiagram::hook(int i, int j) const {
    int arm = parts_[i] - j - 1;
    int leg = 0;
    for (int r = i + 1; r < length() && parts_[r] > j; ++r) ++leg;
    return arm + leg + 1;
}

std::string YoungDiagram::str() const {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) s << (i ? "," : "") << parts_[i];
    s << ')';
    return s.str();
}

namespace {
void partitions_rec(int rest, int maxpart, int max_len, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, max_len, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<YoungDiagram> partitions(int m, int max_len) {
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    partitions_rec(m, m, max_len, cur, out);
    return out;
}

StandardTableau::StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    int m = shape_.boxes();
    if (static_cast<int>(rows_.size()) != shape_.length()) throw UsageError("tableau row count");
    std::vector<bool> seen(m + 1, false);
    for (int i = 0; i < shape_.length(); ++i) {
        if (static_cast<int>(rows_[i].size()) != shape_.parts()[i]) throw UsageError("tableau row length");
        for (int j = 0; j < shape_.parts()[i]; ++j) {
            int x = rows_[i][j];
            if (x < 1 || x > m || seen[x]) throw UsageError("tableau entries must be a permutation");
            seen[x] = true;
            if (j > 0 && rows_[i][j - 1] >= x) throw UsageError("rows must increase");
            if (i > 0 && rows_[i - 1][j] >= x) throw UsageError("columns must increase");
        }
    }
}

std::vector<int> StandardTableau::contents() const {
    std::vector<int> c(boxes());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            c[rows_[i][j] - 1] = static_cast<int>(j) - static_cast<int>(i);
    return c;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string StandardTableau::str() const {
    std::ostringstream s;
    s << '[';
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        s << (i ? "|" : "");
        for (std::size_t j = 0; j < rows_[i].size(); ++j) s << (j ? "," : "") << rows_[i][j];
    }
    s << ']';
    return s.str();
}

namespace {
void fill_rec(const YoungDiagram& mu, int next, std::vector<std::vector<int>>& rows,
              std::vector<StandardTableau>& out) {
    int m = mu.boxes();
    if (next > m) {
        out.emplace_back(mu, rows);
        return;
    }
    for (int i = 0; i < mu.length(); ++i) {
        int j = static_cast<int>(rows[i].size());
        if (j >= mu.parts()[i]) continue;
        if (i > 0 && static_cast<int>(rows[i - 1].size()) <= j) continue;
        rows[i].push_back(next);
        fill_rec(mu, next + 1, rows, out);
        rows[i].pop_back();
    }
}
}  // namespace

std::vector<StandardTableau> standard_tableaux(const YoungDiagram& mu) {
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(mu.length());
    fill_rec(mu, 1, rows, out);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

Integer hook_product(const YoungDiagram& mu) {
    Integer h = 1;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.parts()[i]; ++j) h *= mu.hook(i, j);
    return h;
}

RatOp fusion_idempotent(const StandardTableau& U, int N, FusionTrace* trace) {
    const int m = U.boxes();
    if (U.shape().length() > N) throw UsageError("diagram has more rows than N");
    std::vector<int> c = U.contents();
    if (m == 1) {
        if (trace) *trace = FusionTrace{c, {0}, true};
        return RatOp::identity(N, 1, 1);
    }
    // Variable eps_a sits at position m - a, so eps_1 is last (smallest).
    std::vector<std::string> names;
    for (int a = m; a >= 1; --a) names.push_back("e" + std::to_string(a));
    VarOrder order(names);
    auto pos = [m](int a) { return static_cast<std::size_t>(m - a); };

    // Upper truncation per infinitesimal: enough to absorb every pole order
    // that earlier evaluations push into it.
    std::vector<int> H(m + 1, 0);
    for (int v = 1; v <= m; ++v)
        for (int a = 1; a < v; ++a)
            if (c[a - 1] == c[v - 1]) H[v] += H[a] + 1;

    SeriesOp prod = SeriesOp::identity(N, m, TruncSeries::constant(order, 1));
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            int d = c[a - 1] - c[b - 1];
            std::vector<Window> w(m, Window{0, 0, Trunc::Exact});
            w[pos(a)] = Window{0, H[a], Trunc::Taylor};
            w[pos(b)] = Window{d == 0 ? -(H[a] + 1) : 0, H[b], Trunc::Taylor};
            TruncSeries x(order, w);
            Exps e(m, 0);
            if (d == 0) {
                // 1/(eps_a - eps_b) = -sum_k eps_a^k eps_b^{-k-1}
                for (int k = 0; k <= H[a]; ++k) {
                    e[pos(a)] = k;
                    e[pos(b)] = -k - 1;
                    x.set(e, -1);
                }
            } else {
                // 1/(d + eps_a - eps_b): coefficient of eps_a^j eps_b^l is
                // (-1)^j C(j+l, j) / d^{j+l+1}
                Rational inv_d = 1 / Rational(d);
                for (int j = 0; j <= H[a]; ++j) {
                    for (int l = 0; l <= H[b]; ++l) {
                        Rational t(binomial(static_cast<long>(j + l), static_cast<long>(j)));
                        for (int q = 0; q <= j + l; ++q) t *= inv_d;
                        if (j % 2) t = -t;
                        e[pos(a)] = j;
                        e[pos(b)] = l;
                        x.set(e, t);
                    }
                }
            }
            SeriesOp r = yang_r_series(N, m, a, b, x);
            prod = prod * r;
        }
    }

    // Consecutive evaluation: in the slice eps_1 = ... = eps_{v-1} = 0 no
    // negative power of eps_v may survive.
    for (int v = 1; v <= m; ++v) {
        for (const auto& [key, s] : prod.entries()) {
            for (const auto& [e, coef] : s.terms()) {
                bool in_slice = true;
                for (int a = 1; a < v; ++a) in_slice &= (e[pos(a)] == 0);
                if (in_slice && e[pos(v)] < 0)
                    throw InconsistencyError("fusion: negative power of eps_" + std::to_string(v) +
                                             " survives for tableau " + U.str());
            }
        }
    }
    Exps zero(m, 0);
    Rational h(hook_product(U.shape()));
    RatOp E(N, m);
    for (const auto& [key, s] : prod.entries()) {
        if (!s.known(zero)) throw TruncationError("fusion: constant term outside the eps window");
        E.set(key.first, key.second, s.coeff(zero) / h);
    }
    if (trace) {
        trace->contents = c;
        trace->pole_budget.assign(H.begin() + 1, H.end());
        trace->negative_powers_cancelled = true;
    }
    return E;
}

RatOp jm_oracle_idempotent(const StandardTableau& U, int N) {
    const int m = U.boxes();
    if (U.shape().length() > N) throw UsageError("diagram has more rows than N");
    std::vector<int> c = U.contents();
    RatOp id = RatOp::identity(N, m, 1);
    RatOp E = id;
    for (int k = 2; k <= m; ++k) {
        RatOp X(N, m);
        for (int a = 1; a < k; ++a) X = X + permutation_op<Rational>(N, m, a, k, 1);
        for (int d = -(k - 1); d <= k - 1; ++d) {
            if (d == c[k - 1]) continue;
            E = E * (X - id.scaled(Rational(d))).scaled(1 / Rational(c[k - 1] - d));
        }
    }
    return E;
}

namespace {
RatOp sym_sum(int m, int N, bool alternate) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    RatOp acc(N, m);
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) inv += perm[i] > perm[j];
        Rational sgn = (alternate && inv % 2) ? -1 : 1;
        acc = acc + leg_permutation<Rational>(N, perm, sgn);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.scaled(1 / Rational(factorial(m)));
}
}  // namespace

RatOp symmetrizer(int m, int N) { return sym_sum(m, N, false); }
RatOp antisymmetrizer(int m, int N) { return sym_sum(m, N, true); }

}  // namespace ycl
