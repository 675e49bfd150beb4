#include "mcsub/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcsub {

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged row set");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    if (!(*field_ == rhs.field()) || cols_ != rhs.rows())
        throw std::invalid_argument("matrix product shape/field mismatch");
    Matrix out(field_, rows_, rhs.cols());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            field_->row_axpy(at(i, k), rhs.row(k), out.row(i));
    return out;
}

Vec Matrix::mul_vec(std::span<const FElem> x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = field_->dot(row(i), x);
    return out;
}

Vec Matrix::mul_left(std::span<const FElem> x) const {
    if (x.size() != rows_) throw std::invalid_argument("vector length mismatch");
    Vec out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) field_->row_axpy(x[i], row(i), out);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
    return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
    if (!(*field_ == below.field()) || cols_ != below.cols()) throw std::invalid_argument("stack mismatch");
    Matrix out(field_, rows_ + below.rows(), cols_);
    for (std::size_t i = 0; i < rows_; ++i) std::copy(row(i).begin(), row(i).end(), out.row(i).begin());
    for (std::size_t i = 0; i < below.rows(); ++i)
        std::copy(below.row(i).begin(), below.row(i).end(), out.row(rows_ + i).begin());
    return out;
}

bool EchelonBasis::insert(Vec row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    const Field& f = *field_;
    // forward-reduce against existing pivots
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FElem c = row[pivot_cols_[r]];
        if (c != 0) f.row_axpy(f.neg(c), rows_[r], row);
    }
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (row[j] != 0) {
            piv = j;
            break;
        }
    if (piv == cols_) return false;
    f.row_scale(f.inv(row[piv]), row);
    // back-eliminate the new pivot column from the existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FElem c = rows_[r][piv];
        if (c != 0) f.row_axpy(f.neg(c), row, rows_[r]);
    }
    const auto pos = std::size_t(std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), piv) - pivot_cols_.begin());
    pivot_cols_.insert(pivot_cols_.begin() + long(pos), piv);
    rows_.insert(rows_.begin() + long(pos), std::move(row));
    return true;
}

Vec EchelonBasis::reduce(Vec row) const {
    const Field& f = *field_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FElem c = row[pivot_cols_[r]];
        if (c != 0) f.row_axpy(f.neg(c), rows_[r], row);
    }
    return row;
}

bool EchelonBasis::contains(Vec row) const {
    row = reduce(std::move(row));
    return std::all_of(row.begin(), row.end(), [](FElem x) { return x == 0; });
}

Matrix EchelonBasis::to_matrix() const {
    Matrix out(field_, rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) std::copy(rows_[r].begin(), rows_[r].end(), out.row(r).begin());
    return out;
}

RrefResult rref(const Matrix& m) {
    EchelonBasis basis(m.field_ptr(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row_vec(r));
    return {basis.to_matrix(), basis.rank(), basis.pivots()};
}

Matrix kernel(const Matrix& m) {
    const auto red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    const Field& f = m.field();

    EchelonBasis basis(m.field_ptr(), n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = f.neg(red.matrix.at(r, free));
        basis.insert(std::move(v));
    }
    return basis.to_matrix();
}

std::optional<Vec> solve(const Matrix& m, std::span<const FElem> y) {
    if (y.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(m.field_ptr(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
        aug.at(i, m.cols()) = y[i];
    }
    const auto red = rref(aug);
    Vec x(m.cols(), 0);
    for (std::size_t r = 0; r < red.rank; ++r) {
        if (red.pivots[r] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[red.pivots[r]] = red.matrix.at(r, m.cols());
    }
    return x;
}

std::size_t hamming_weight(std::span<const FElem> v) {
    std::size_t w = 0;
    for (FElem x : v) w += (x != 0);
    return w;
}

}  // namespace mcsub
