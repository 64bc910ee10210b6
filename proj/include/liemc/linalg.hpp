#pragma once

#include <optional>
#include <vector>

#include "liemc/rational.hpp"

namespace liemc {

// Sparse exact linear algebra over the rationals. Elimination is fully
// deterministic: columns are eliminated in increasing order and the pivot
// row is the surviving row with the smallest original index, so solver
// output never depends on hashing or timing.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, Rational v);

    const std::vector<std::pair<int, Rational>>& row(int r) const { return data_[size_t(r)]; }

private:
    int rows_, cols_;
    // per-row sorted (column, value) entries
    std::vector<std::vector<std::pair<int, Rational>>> data_;

    friend struct Elimination;
};

struct LinearSolveResult {
    std::optional<std::vector<Rational>> solution;  // free variables set to zero
    std::vector<Rational> residual;                 // b - A x for the best-effort x
    int rank = 0;
};

// Solve A x = b exactly; when inconsistent, solution is empty and residual
// holds the unreachable part of b as an obstruction certificate.
LinearSolveResult linear_solve(const SparseMatrix& A, const std::vector<Rational>& b);

// Basis of the exact nullspace, one vector per free column in column order.
std::vector<std::vector<Rational>> nullspace(const SparseMatrix& A);

int rank(const SparseMatrix& A);

}  // namespace liemc
