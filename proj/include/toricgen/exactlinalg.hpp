#pragma once

#include <utility>
#include <vector>

#include "toricgen/int_math.hpp"

namespace toricgen {

// Integer matrix stored as sparse per-column entry lists; relation matrices
// have two +-1 entries per column, so this is the natural layout. A dense
// accessor exists for generality and for the cross-check path.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}

    static IntMatrix from_dense(const std::vector<std::vector<Int>>& entries);
    static IntMatrix identity(int n);

    void set(int row, int col, Int value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<std::pair<int, Int>>& column(int c) const { return columns_[c]; }
    std::vector<std::vector<Int>> to_dense() const;

private:
    int rows_;
    int cols_;
    // each column: (row, value) entries sorted by row
    std::vector<std::vector<std::pair<int, Int>>> columns_;
};

// Exact rank over Q by fraction-free (Bareiss) elimination on the sparse
// rows; no floating point, no pivot tolerance.
int rank(const IntMatrix& m);

// Same elimination on a dense copy; retained as an independent cross-check.
int rank_dense(const IntMatrix& m);

// Greedy leftmost maximal independent column set (the pivot columns of the
// row echelon form), size rank(m), deterministic.
std::vector<int> pivot_columns(const IntMatrix& m);

}  // namespace toricgen
