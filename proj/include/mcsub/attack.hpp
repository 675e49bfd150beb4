#pragma once

#include <map>
#include <optional>
#include <string>

#include "mcsub/mceliece.hpp"

namespace mcsub {

/// Square-code distinguisher: the square of an evaluation-code subcode stays
/// far below the dimension a random code of the same size would reach.
struct DistinguisherReport {
    std::size_t l = 0;                   // input dimension
    std::size_t sq_dim = 0;              // dim C^(2)
    std::size_t random_expectation = 0;  // min(n, l(l+1)/2)
    bool algebraic_like = false;         // sq_dim < random_expectation
};

DistinguisherReport distinguish(const LinearCode& c);

/// Blind recovery of the enclosing code by 2-closure.
struct RecoveryResult {
    LinearCode code;
    bool closure_degenerate = false;  // the square filled the whole space
    std::size_t sq_dim = 0;
};

RecoveryResult attack_recover_code(const LinearCode& c_pub);

/// Closure attack through seeded shortenings, summed back at full length.
struct ShorteningResult {
    LinearCode code;
    bool all_degenerate = false;
    std::size_t trials_used = 0;
};

ShorteningResult attack_with_shortening(const LinearCode& c_pub, std::size_t s, std::size_t trials,
                                        std::uint64_t seed);

// Smallest shortening size bringing a known divisor degree within the closure
// bound: deg - s <= (n - s - 2)/2.
std::size_t shortening_size_for_degree(std::size_t deg, std::size_t n);

/// Evaluation-point and multiplier recovery for generalized Reed-Solomon
/// codes: systematic form, then cross-ratio style reconstruction of the points
/// through fitted fractional-linear maps.  The returned pair reconstructs the
/// same code (representations are not unique); normalization a[0]=0, a[1]=1.
struct SsResult {
    bool success = false;
    std::string reason;  // set on failure
    Vec a, b;
};

SsResult ss_recover(const LinearCode& c, std::size_t k);

// Multipliers b with c_pub inside GRS_k(a, b), through the dual-multiplier
// linear system; nullopt when the solution space is not one-dimensional with
// all entries nonzero, or the containment fails.
std::optional<Vec> recover_multipliers(const LinearCode& c_pub, const Vec& a, std::size_t k);

struct RecoveredGrs {
    Vec a, b;
    std::size_t k = 0;
    bool certified = false;  // GRS_k(a, b) contains the public code, checked
};

/// Message-recovery decoder assembled by an attack: ECP decoding in the
/// recovered enclosing code, then solving against the public generator.
class AttackerDecoder {
  public:
    AttackerDecoder(EcpPair pair, Matrix g_pub) : decoder_(std::move(pair)), solver_(std::move(g_pub)) {}
    std::optional<Vec> decode_message(std::span<const FElem> ciphertext) const;
    const EcpPair& pair() const { return decoder_.pair(); }

  private:
    EcpDecoder decoder_;
    MessageSolver solver_;
};

// Wall-clock milliseconds per pipeline stage.
using StageTimes = std::map<std::string, long>;

/// Full genus-zero pipeline: square, infer k, recover points, recover
/// multipliers, build the pair.  stage holds the first failed stage, or
/// "done".
struct GrsAttackOutcome {
    bool success = false;
    std::string stage;
    std::size_t sq_dim = 0;
    std::optional<RecoveredGrs> recovered;
    std::optional<AttackerDecoder> decoder;
    StageTimes times;
};

GrsAttackOutcome grs_full_attack(const PublicKey& pk);

/// Hermitian pipeline: blind closure recovery (with shortening fallback),
/// equality check against the oracle divisor, then a structure-aware ECP.
struct HermitianAttackOutcome {
    bool success = false;
    std::string stage;
    std::size_t sq_dim = 0;
    std::size_t recovered_dim = 0;
    bool used_shortening = false;
    std::optional<AttackerDecoder> decoder;
    StageTimes times;
};

HermitianAttackOutcome hermitian_full_attack(const PublicKey& pk, const HermitianSpec& oracle_spec,
                                             std::uint64_t seed = 0);

}  // namespace mcsub
