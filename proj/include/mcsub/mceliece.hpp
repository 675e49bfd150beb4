#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "mcsub/ecp.hpp"
#include "mcsub/grs.hpp"
#include "mcsub/hermitian.hpp"

namespace mcsub {

using CodeSpec = std::variant<GrsSpec, HermitianSpec>;

LinearCode enclosing_code(const CodeSpec& spec);
FieldPtr spec_field(const CodeSpec& spec);
std::size_t spec_length(const CodeSpec& spec);
// Dimension of the square of the enclosing code (known from the structure).
std::size_t spec_square_dim(const CodeSpec& spec);

// Error capacity published with a key: floor((d* - 1 - g)/2) against the
// Goppa designed distance of the dual divisor for Hermitian codes (clamped to
// at least one correctable error), floor((n - k)/2) for GRS.
unsigned default_error_capacity(const CodeSpec& spec);
// Largest t the secret structure can decode through an ECP.
unsigned max_error_capacity(const CodeSpec& spec);

struct PublicKey {
    FieldPtr field;
    Matrix g_pub;  // l x n, deliberately not in canonical form
    unsigned t = 0;

    std::size_t n() const { return g_pub.cols(); }
    std::size_t l() const { return g_pub.rows(); }
};

struct SecretKey {
    CodeSpec spec;
    Matrix s;  // l x k selection matrix of rank l
    std::uint64_t seed = 0;
    // Column permutation applied after the subcode selection; empty means
    // identity.  Off by default: the closure attack is permutation-covariant,
    // and an unpermuted key keeps verification against the spec exact.
    std::vector<std::size_t> permutation;
};

struct KeyPair {
    PublicKey pub;
    SecretKey sec;
    // Constraint on the subcode dimension: C(l+1, 2) >= dim C(2E).  Keys below
    // the threshold are expected to look random under the square distinguisher.
    bool resistant_by_pair_bound = false;
    std::size_t pair_bound = 0;    // l(l+1)/2
    std::size_t square_dim = 0;    // dim C(2E)
};

KeyPair keygen(const CodeSpec& spec, std::size_t l, std::uint64_t seed,
               std::optional<unsigned> t_override = std::nullopt, bool permute_columns = false);

// y = msg * G_pub + e with wt(e) exactly t (positions and values seeded).
Vec encrypt(const PublicKey& pk, std::span<const FElem> msg, std::uint64_t seed);
Vec encrypt_with_weight(const PublicKey& pk, std::span<const FElem> msg, std::size_t weight, std::uint64_t seed);

/// Solves msg * G = word for full-row-rank G through a precomputed inverse on
/// a pivot column set; returns nullopt when the word is outside the row space.
class MessageSolver {
  public:
    explicit MessageSolver(Matrix g);
    std::optional<Vec> solve_message(std::span<const FElem> word) const;
    const Matrix& generator() const { return g_; }

  private:
    Matrix g_;
    std::vector<std::size_t> pivot_cols_;
    Matrix inverse_;  // l x l
};

/// Legitimate decrypter: ECP decoding in the enclosing code with the largest
/// capacity the secret structure supports, then message recovery.
class Decrypter {
  public:
    explicit Decrypter(const SecretKey& sk);
    std::optional<Vec> decrypt(std::span<const FElem> ciphertext) const;
    const EcpPair& pair() const { return decoder_.pair(); }

  private:
    EcpDecoder decoder_;
    MessageSolver solver_;
    std::vector<std::size_t> permutation_;
};

// One-shot convenience (builds a Decrypter per call).
std::optional<Vec> decrypt(const SecretKey& sk, std::span<const FElem> ciphertext);

}  // namespace mcsub
