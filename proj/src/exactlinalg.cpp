#include "toricgen/exactlinalg.hpp"

#include <algorithm>

namespace toricgen {

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Int>>& entries) {
    const int rows = static_cast<int>(entries.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(entries.front().size());
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(entries[r].size()) != cols)
            throw std::invalid_argument("ragged dense matrix");
        for (int c = 0; c < cols; ++c)
            if (entries[r][c] != 0) m.set(r, c, entries[r][c]);
    }
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void IntMatrix::set(int row, int col, Int value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("IntMatrix::set");
    auto& entries = columns_[col];
    auto it = std::lower_bound(entries.begin(), entries.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != entries.end() && it->first == row) {
        if (value == 0)
            entries.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        entries.insert(it, {row, value});
    }
}

std::vector<std::vector<Int>> IntMatrix::to_dense() const {
    std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, 0));
    for (int c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c]) d[r][c] = v;
    return d;
}

namespace {

// a sparse row: (column, value) entries sorted by column
using SparseRow = std::vector<std::pair<int, Int>>;

Int entry_at(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : 0;
}

// row := (pivot_val * row - multiplier * pivot_row) / divisor, merging the
// sorted entry lists. Every division is exact: after k elimination steps each
// entry equals a (k+1)-minor of the original matrix (Sylvester's identity).
SparseRow combine(const SparseRow& row, Int pivot_val, Int multiplier, const SparseRow& pivot_row,
                  Int divisor) {
    SparseRow out;
    out.reserve(row.size() + pivot_row.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot_row.size()) {
        int col;
        Int a = 0, p = 0;
        if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
            col = row[i].first;
            a = row[i].second;
            ++i;
        } else if (i == row.size() || pivot_row[j].first < row[i].first) {
            col = pivot_row[j].first;
            p = pivot_row[j].second;
            ++j;
        } else {
            col = row[i].first;
            a = row[i].second;
            p = pivot_row[j].second;
            ++i;
            ++j;
        }
        const Int v =
            div_exact(checked_sub(checked_mul(pivot_val, a), checked_mul(multiplier, p)), divisor);
        if (v != 0) out.emplace_back(col, v);
    }
    return out;
}

void scale_row(SparseRow& row, Int pivot_val, Int divisor) {
    for (auto& [col, v] : row) v = div_exact(checked_mul(v, pivot_val), divisor);
}

struct Echelon {
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Fraction-free row echelon reduction over the sparse rows; pivot columns
// are scanned left to right, the pivot row is the lowest-index active row
// with a nonzero entry in the column.
Echelon eliminate(const IntMatrix& m) {
    std::vector<SparseRow> rows(m.rows());
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) rows[r].emplace_back(c, v);

    std::vector<int> active(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) active[i] = static_cast<int>(i);

    Echelon result;
    Int prev = 1;
    for (int col = 0; col < m.cols() && !active.empty(); ++col) {
        // active rows have zero entries in all processed columns, so their
        // first entry is the candidate
        int pivot_pos = -1;
        for (std::size_t i = 0; i < active.size(); ++i) {
            const auto& row = rows[active[i]];
            if (!row.empty() && row.front().first == col) {
                pivot_pos = static_cast<int>(i);
                break;
            }
        }
        if (pivot_pos < 0) continue;

        const int pivot_row_idx = active[pivot_pos];
        const SparseRow pivot_row = std::move(rows[pivot_row_idx]);
        const Int pivot_val = pivot_row.front().second;
        active.erase(active.begin() + pivot_pos);

        for (int idx : active) {
            auto& row = rows[idx];
            const Int mult = entry_at(row, col);
            if (mult == 0)
                scale_row(row, pivot_val, prev);
            else
                row = combine(row, pivot_val, mult, pivot_row, prev);
        }
        prev = pivot_val;
        ++result.rank;
        result.pivot_cols.push_back(col);
    }
    return result;
}

}  // namespace

int rank(const IntMatrix& m) { return eliminate(m).rank; }

std::vector<int> pivot_columns(const IntMatrix& m) { return eliminate(m).pivot_cols; }

int rank_dense(const IntMatrix& m) {
    std::vector<std::vector<Int>> a = m.to_dense();
    const int rows = m.rows();
    const int cols = m.cols();
    int r = 0;
    Int prev = 1;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][col] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = div_exact(
                    checked_sub(checked_mul(a[r][col], a[i][j]), checked_mul(a[i][col], a[r][j])),
                    prev);
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

}  // namespace toricgen
