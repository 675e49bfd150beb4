#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mcsub/matrix.hpp"

namespace mcsub {

/// An [n, k] linear code, held as its generator matrix in reduced row-echelon
/// form.  The RREF is the canonical representative of the row space, so two
/// LinearCode values describe the same code iff they compare equal.
class LinearCode {
  public:
    static LinearCode from_rows(const Matrix& rows);
    static LinearCode zero(FieldPtr field, std::size_t n);
    static LinearCode full(FieldPtr field, std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& gen() const { return gen_; }
    const Field& field() const { return gen_.field(); }
    const FieldPtr& field_ptr() const { return gen_.field_ptr(); }

    bool contains(std::span<const FElem> word) const;
    bool contains(const LinearCode& sub) const;
    bool is_zero() const { return k() == 0; }
    bool is_full() const { return k() == n_; }

    bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }
    bool operator!=(const LinearCode& other) const { return !(*this == other); }

  private:
    explicit LinearCode(Matrix rref_gen) : n_(rref_gen.cols()), gen_(std::move(rref_gen)) {}

    std::size_t n_;
    Matrix gen_;  // k x n, RREF
};

using PositionSet = std::set<std::size_t>;

LinearCode dual(const LinearCode& c);

// Span of all componentwise products of basis vectors of a and b.
LinearCode schur_product(const LinearCode& a, const LinearCode& b);
// c^(1) = c, c^(t) = c * c^(t-1).
LinearCode schur_power(const LinearCode& c, unsigned t);

enum class ClosureMode {
    kFormula,       // (C^(t-1) * (C^(t))^perp)^perp
    kDefinitional,  // kernel of the linear system {a : a * C^(t-1) subset of C^(t)}
    kCrossValidate  // both, asserting agreement
};

// t-closure {a : a * C^(t-1) subset of C^(t)}, t >= 2.  Note the closure of the
// zero code comes out as the full space (dual of an empty product).
LinearCode closure(const LinearCode& c, unsigned t, ClosureMode mode = ClosureMode::kFormula);

// Codewords vanishing on positions, restricted to the complement.
LinearCode shorten(const LinearCode& c, const PositionSet& positions);
// Columns at positions deleted.
LinearCode puncture(const LinearCode& c, const PositionSet& positions);
// Words of c with zeros inserted at positions (given in the length-n_total frame).
LinearCode extend_by_zeros(const LinearCode& c, const PositionSet& positions, std::size_t n_total);

LinearCode sum_codes(const LinearCode& a, const LinearCode& b);
LinearCode intersect_codes(const LinearCode& a, const LinearCode& b);

// l-dimensional subcode spanned by seeded random combinations of the basis.
LinearCode random_subcode(const LinearCode& c, std::size_t l, std::uint64_t seed);
// Random [n, k] code (rank-k uniform generator matrix, redrawn until full rank).
LinearCode random_code(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed);

// Exact minimum distance by codeword enumeration; guarded to q^k <= 2^24.
std::size_t min_distance_bruteforce(const LinearCode& c);

}  // namespace mcsub
