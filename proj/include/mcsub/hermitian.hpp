#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mcsub/linear_code.hpp"

namespace mcsub {

/// One-point code on the Hermitian curve y^q0 + y = x^(q0+1) over GF(q0^2):
/// functions with poles only at the point at infinity, of pole order <= m,
/// evaluated at all q0^3 affine points.  Genus is q0(q0-1)/2.
struct HermitianSpec {
    FieldPtr field;  // GF(q0^2)
    unsigned q0 = 0;
    int m = 0;  // divisor degree; m < 0 gives the zero code

    std::size_t n() const { return std::size_t(q0) * q0 * q0; }
    unsigned genus() const { return q0 * (q0 - 1) / 2; }
};

// Builds the canonical field GF(q0^2) for a prime-power q0.
HermitianSpec make_hermitian_spec(unsigned q0, int m);

// Affine points (x, y) in the fixed canonical order: sorted by the integer
// encoding of x, then of y.  Exactly q0^3 of them.
std::vector<std::pair<FElem, FElem>> hermitian_points(const HermitianSpec& spec);

// Monomial exponents (i, j) with x^i y^j in the Riemann-Roch space: j < q0 and
// pole order i*q0 + j*(q0+1) <= m.
std::vector<std::pair<unsigned, unsigned>> hermitian_monomials(const HermitianSpec& spec);

LinearCode hermitian_code(const HermitianSpec& spec);

// Dimension without building the code: pole orders <= m minus the evaluation
// kernel correction (pole orders <= m - n).
std::size_t hermitian_code_dim(const HermitianSpec& spec);

// Divisor degree of the dual: m_dual = n + 2g - 2 - m; the dual of a one-point
// Hermitian code is again one-point Hermitian.
HermitianSpec hermitian_dual(const HermitianSpec& spec);

}  // namespace mcsub
