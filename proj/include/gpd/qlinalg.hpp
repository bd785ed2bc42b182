#pragma once

#include "gpd/rational.hpp"

#include <cstddef>
#include <vector>

namespace gpd {

using QVec = std::vector<GaussRat>;

/// Dense matrix over Gaussian rationals. Sized for desk-scale exact checks;
/// representation matrices here are mostly 0/1 permutation blocks.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussRat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussRat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    GaussRat trace() const;
    bool is_identity() const;

    friend QMat operator*(const QMat& a, const QMat& b);
    friend bool operator==(const QMat& a, const QMat& b);
    friend bool operator!=(const QMat& a, const QMat& b) { return !(a == b); }

    QVec apply(const QVec& v) const;  // matrix * column vector

private:
    std::size_t rows_ = 0, cols_ = 0;
    QVec data_;
};

/// Incremental reduced row echelon form over the Gaussian rationals.
/// Rows are reduced as they arrive; pivot columns are always the lowest
/// available index, so ranks, nullspace bases, and quotient coordinates are
/// deterministic. Reduction skips zero coefficients, which keeps the very
/// sparse constraint systems in this library fast.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    /// Returns true if the row increased the rank.
    bool add_row(QVec row);
    bool add_sparse_row(const std::vector<std::pair<std::size_t, GaussRat>>& entries);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Pivot column of each stored row, strictly increasing.
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }
    /// Columns that carry no pivot, ascending.
    std::vector<std::size_t> free_cols() const;

    /// Remainder of v modulo the row space; pivot coordinates are zeroed.
    QVec reduce(QVec v) const;

    /// Basis of the right nullspace {x : Rx = 0}, one vector per free column,
    /// ordered by free column index. The free coordinate of each vector is 1.
    std::vector<QVec> nullspace_basis() const;

private:
    std::size_t cols_;
    std::vector<QVec> rows_;          // normalized: leading entry 1, echelon order
    std::vector<std::size_t> pivots_;  // pivots_[i] = pivot column of rows_[i]
};

}  // namespace gpd
