#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace mcsub {

// Element of GF(p^m), encoded as an integer index in [0, q).  The index packs
// the coefficient vector (c0, ..., c_{m-1}) little-endian base p, so 0 is the
// additive and 1 the multiplicative identity.
using FElem = std::uint16_t;

/// Exact arithmetic in GF(p^m), q = p^m <= 2^16.  Multiplication and inversion
/// run on log/antilog tables; for small q full add/mul tables are kept so the
/// row kernels used by the linear algebra are pure table lookups.  Immutable
/// after construction and safe to share across threads.
class Field {
  public:
    // Uses the canonical modulus: the monic irreducible of degree m over GF(p)
    // with the smallest integer encoding sum(c_i p^i).
    Field(unsigned p, unsigned m);
    Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    FElem add(FElem a, FElem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_generic(a, b);
    }
    FElem sub(FElem a, FElem b) const {
        if (p_ == 2) return a ^ b;
        return add(a, neg(b));
    }
    FElem neg(FElem a) const {
        if (p_ == 2) return a;
        if (!neg_table_.empty()) return neg_table_[a];
        return neg_generic(a);
    }
    FElem mul(FElem a, FElem b) const {
        if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
        if (a == 0 || b == 0) return 0;
        return exp_[std::size_t(log_[a]) + log_[b]];
    }
    FElem inv(FElem a) const;  // throws std::invalid_argument on 0
    FElem div(FElem a, FElem b) const { return mul(a, inv(b)); }
    FElem pow(FElem a, long long e) const;
    FElem primitive() const { return primitive_; }

    // Fused row kernels (hot paths of the Gaussian elimination).
    // dst += coef * src
    void row_axpy(FElem coef, std::span<const FElem> src, std::span<FElem> dst) const;
    // row *= coef
    void row_scale(FElem coef, std::span<FElem> row) const;
    // out[i] = a[i] * b[i]
    void row_hadamard(std::span<const FElem> a, std::span<const FElem> b, std::span<FElem> out) const;
    FElem dot(std::span<const FElem> a, std::span<const FElem> b) const;
    FElem dot3(std::span<const FElem> a, std::span<const FElem> b, std::span<const FElem> c) const;

    std::string description() const;  // "GF(p^m)"

  private:
    void build_tables();
    FElem add_generic(FElem a, FElem b) const;
    FElem neg_generic(FElem a) const;
    FElem mul_nomod_table(FElem a, FElem b) const;  // polynomial multiply + reduce

    unsigned p_ = 0;
    unsigned m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> modulus_;
    FElem primitive_ = 0;

    std::vector<FElem> exp_;   // size 2(q-1), exp_[i] = g^(i mod q-1)
    std::vector<std::uint16_t> log_;  // size q, log_[0] unused
    std::vector<FElem> inv_;   // size q, inv_[0] unused
    std::vector<FElem> add_table_, mul_table_, neg_table_;  // only for small q
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned p, unsigned m);
FieldPtr make_field(unsigned p, unsigned m, std::vector<unsigned> modulus);
// Field of order q = p^m for prime-power q (factors q, canonical modulus).
FieldPtr make_field_of_order(std::uint32_t q);

bool is_prime(std::uint64_t v);
// Splits a prime power q into (p, e); throws if q is not a prime power >= 2.
std::pair<unsigned, unsigned> factor_prime_power(std::uint32_t q);

}  // namespace mcsub
