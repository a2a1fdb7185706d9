#pragma once

#include <string>
#include <vector>

#include "ycl/scalars.hpp"
#include "ycl/tensor.hpp"

namespace ycl {

class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);  // weakly decreasing, positive
    const std::vector<int>& parts() const { return parts_; }
    int boxes() const;
    int length() const { return static_cast<int>(parts_.size()); }
    // Hook length of box (row i, column j), 0-based.
    int hook(int i, int j) const;
    std::string str() const;
    bool operator==(const YoungDiagram& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
};

// All diagrams with m boxes and at most max_len rows, in reverse lexicographic order.
std::vector<YoungDiagram> partitions(int m, int max_len);

class StandardTableau {
public:
    StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> rows);
    const YoungDiagram& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int boxes() const { return shape_.boxes(); }
    // c_a = column - row of the box holding a, for a = 1..m (index a-1).
    std::vector<int> contents() const;
    std::vector<int> reading_word() const;
    std::string str() const;

private:
    YoungDiagram shape_;
    std::vector<std::vector<int>> rows_;
};

// Deterministic order: lexicographic in the row-reading word.
std::vector<StandardTableau> standard_tableaux(const YoungDiagram& mu);
Integer hook_product(const YoungDiagram& mu);

struct FusionTrace {
    std::vector<int> contents;
    // number of factors whose expansion carried a pole in each infinitesimal
    std::vector<int> pole_budget;
    bool negative_powers_cancelled = false;
};

// E_U by consecutive evaluation of the ordered R-matrix product at the
// contents, realized through formal infinitesimals (eps_1 evaluated first).
RatOp fusion_idempotent(const StandardTableau& U, int N, FusionTrace* trace = nullptr);

// Independent oracle: Lagrange interpolation in the Jucys-Murphy elements.
RatOp jm_oracle_idempotent(const StandardTableau& U, int N);

RatOp symmetrizer(int m, int N);
RatOp antisymmetrizer(int m, int N);

}  // namespace ycl
