#pragma once

#include <optional>
#include <string>

#include "mcsub/grs.hpp"
#include "mcsub/hermitian.hpp"
#include "mcsub/linear_code.hpp"

namespace mcsub {

/// Error-correcting pair for a code C: codes (A, B) with A*B inside the dual
/// of C, correcting t errors.  The designed-distance lower bounds are supplied
/// by whichever construction built the pair (Singleton for GRS, Goppa bound
/// for Hermitian divisors); hand-built pairs default them to the trivial 1.
struct EcpPair {
    LinearCode a;
    LinearCode b;
    LinearCode c;
    unsigned t = 0;
    std::size_t d_a_lb = 1;      // lower bound on d(A)
    std::size_t d_bperp_lb = 1;  // lower bound on d(B^perp)
    std::size_t d_c_lb = 1;      // lower bound on d(C)
};

struct EcpCertificate {
    bool pass = false;
    std::string failed_condition;  // empty when pass
    std::size_t dim_a = 0, dim_b = 0;
};

// Checks A*B inside C^perp by rank, dim A > t, d(B^perp) > t and
// d(A) + d(C) > n on the recorded bounds.  Failure is a result, not an error.
EcpCertificate ecp_validate(const EcpPair& pair);

// A = GRS_{t+1}(a, 1), B = GRS_{n-k-t}(a, b_perp); valid for t <= (n-k)/2.
EcpPair build_ecp_grs(const GrsSpec& spec, unsigned t);

// A = C((t+g) P_inf), B = C((m_dual - t - g) P_inf);
// valid for t <= (n - m - 1 - g)/2.
EcpPair build_ecp_hermitian(const HermitianSpec& spec, unsigned t);

/// Bounded-distance decoder driven by a validated pair.  Locates errors with
/// the kernel {a in A : <a*y, b> = 0 for all b in B} and solves the syndrome
/// equation restricted to the zero set of the located vector.
class EcpDecoder {
  public:
    explicit EcpDecoder(EcpPair pair);

    // Returns the codeword, or nullopt when no kernel vector yields a
    // consistent, unambiguous erasure solution (weight > t or invalid pair).
    std::optional<Vec> decode(std::span<const FElem> received) const;

    const EcpPair& pair() const { return pair_; }

  private:
    EcpPair pair_;
    Matrix parity_;  // generator of dual(C)
};

// One-shot convenience wrapper.
std::optional<Vec> ecp_decode(const EcpPair& pair, std::span<const FElem> received);

}  // namespace mcsub
