#pragma once

#include <cstdint>

#include "mcsub/linear_code.hpp"

namespace mcsub {

/// Evaluation points and column multipliers of a generalized Reed-Solomon code:
/// codewords (b_1 f(a_1), ..., b_n f(a_n)) for polynomials f of degree < k.
struct GrsSpec {
    FieldPtr field;
    Vec a;  // pairwise distinct evaluation points
    Vec b;  // nonzero column multipliers
    std::size_t k = 0;

    std::size_t n() const { return a.size(); }
    void validate() const;  // throws on repeated points / zero multipliers / bad k
};

LinearCode grs_code(const GrsSpec& spec);

// Random spec: distinct points and nonzero multipliers drawn from the seed.
GrsSpec random_grs_spec(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed);

// Dual multipliers: dual(GRS_k(a, b)) = GRS_{n-k}(a, b_perp) with
// b_perp_i = 1 / (b_i * prod_{j != i} (a_i - a_j)).
Vec grs_dual_multipliers(const Field& f, const Vec& a, const Vec& b);

}  // namespace mcsub
