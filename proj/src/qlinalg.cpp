#include "gpd/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpd {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
    return m;
}

GaussRat QMat::trace() const {
    if (rows_ != cols_) throw std::domain_error("QMat::trace: matrix not square");
    GaussRat t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool QMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != GaussRat(r == c ? 1 : 0)) return false;
    return true;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("QMat: dimension mismatch in product");
    QMat out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussRat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const GaussRat& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

bool operator==(const QMat& a, const QMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

QVec QMat::apply(const QVec& v) const {
    if (v.size() != cols_) throw std::domain_error("QMat::apply: dimension mismatch");
    QVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const GaussRat& a = at(i, j);
            if (!a.is_zero()) out[i] += a * v[j];
        }
    return out;
}

bool RowReducer::add_row(QVec row) {
    if (row.size() != cols_) throw std::domain_error("RowReducer: wrong row length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const GaussRat& coeff = row[pivots_[i]];
        if (coeff.is_zero()) continue;
        GaussRat f = coeff;  // pivot rows are normalized to leading 1
        const QVec& p = rows_[i];
        for (std::size_t c = pivots_[i]; c < cols_; ++c)
            if (!p[c].is_zero()) row[c] -= f * p[c];
    }
    std::size_t lead = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!row[c].is_zero()) { lead = c; break; }
    if (lead == cols_) return false;

    GaussRat inv = GaussRat(1) / row[lead];
    for (std::size_t c = lead; c < cols_; ++c)
        if (!row[c].is_zero()) row[c] *= inv;

    // Back-eliminate the new pivot column from existing rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        GaussRat f = rows_[i][lead];
        if (f.is_zero()) continue;
        for (std::size_t c = lead; c < cols_; ++c)
            if (!row[c].is_zero()) rows_[i][c] -= f * row[c];
    }

    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
}

bool RowReducer::add_sparse_row(const std::vector<std::pair<std::size_t, GaussRat>>& entries) {
    QVec row(cols_);
    bool any = false;
    for (const auto& [c, v] : entries) {
        if (c >= cols_) throw std::domain_error("RowReducer: column out of range");
        row[c] += v;
    }
    for (const auto& v : row)
        if (!v.is_zero()) { any = true; break; }
    if (!any) return false;
    return add_row(std::move(row));
}

std::vector<std::size_t> RowReducer::free_cols() const {
    std::vector<std::size_t> frees;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pi < pivots_.size() && pivots_[pi] == c) { ++pi; continue; }
        frees.push_back(c);
    }
    return frees;
}

QVec RowReducer::reduce(QVec v) const {
    if (v.size() != cols_) throw std::domain_error("RowReducer::reduce: wrong length");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const GaussRat& coeff = v[pivots_[i]];
        if (coeff.is_zero()) continue;
        GaussRat f = coeff;
        const QVec& p = rows_[i];
        for (std::size_t c = pivots_[i]; c < cols_; ++c)
            if (!p[c].is_zero()) v[c] -= f * p[c];
    }
    return v;
}

std::vector<QVec> RowReducer::nullspace_basis() const {
    std::vector<QVec> basis;
    for (std::size_t f : free_cols()) {
        QVec x(cols_);
        x[f] = GaussRat(1);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const GaussRat& coeff = rows_[i][f];
            if (!coeff.is_zero()) x[pivots_[i]] = -coeff;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace gpd
