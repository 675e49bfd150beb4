#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mcsub/field.hpp"

namespace mcsub {

using Vec = std::vector<FElem>;

/// Dense row-major matrix over a finite field.  Plain value type; all
/// operations build new matrices.
class Matrix {
  public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<FElem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const FElem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

    Matrix mul(const Matrix& rhs) const;
    Vec mul_vec(std::span<const FElem> x) const;       // M x
    Vec mul_left(std::span<const FElem> x) const;      // x M
    Matrix transposed() const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix stacked(const Matrix& below) const;

    bool operator==(const Matrix& other) const {
        return *field_ == other.field() && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<FElem> data_;
};

/// Row space of a growing set of vectors, maintained in reduced row-echelon
/// form the whole time (insert reduces the new row against the basis and
/// back-eliminates the new pivot from it).  This is the single elimination
/// engine behind rref/kernel/rank and the code operations.
class EchelonBasis {
  public:
    EchelonBasis(FieldPtr field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

    // Returns true if the row enlarged the span.
    bool insert(Vec row);
    // Residual of row after reduction by the basis (zero iff row in span).
    Vec reduce(Vec row) const;
    bool contains(Vec row) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool is_full() const { return rows_.size() == cols_; }
    const std::vector<std::size_t>& pivots() const { return pivot_cols_; }

    Matrix to_matrix() const;  // rank x cols, in RREF

  private:
    FieldPtr field_;
    std::size_t cols_;
    std::vector<Vec> rows_;                 // sorted by pivot column
    std::vector<std::size_t> pivot_cols_;   // parallel to rows_
};

struct RrefResult {
    Matrix matrix;  // zero rows trimmed
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

// Unique reduced row-echelon form; zero rows are trimmed.
RrefResult rref(const Matrix& m);

// RREF basis of the right kernel {x : M x = 0}; (cols - rank) rows.
Matrix kernel(const Matrix& m);

// Some x with M x = y, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, std::span<const FElem> y);

std::size_t hamming_weight(std::span<const FElem> v);

}  // namespace mcsub
