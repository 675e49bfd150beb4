#include "mcsub/mceliece.hpp"

#include <stdexcept>

#include "mcsub/rng.hpp"

namespace mcsub {

LinearCode enclosing_code(const CodeSpec& spec) {
    if (const auto* g = std::get_if<GrsSpec>(&spec)) return grs_code(*g);
    return hermitian_code(std::get<HermitianSpec>(spec));
}

FieldPtr spec_field(const CodeSpec& spec) {
    return std::visit([](const auto& s) { return s.field; }, spec);
}

std::size_t spec_length(const CodeSpec& spec) {
    return std::visit([](const auto& s) { return s.n(); }, spec);
}

std::size_t spec_square_dim(const CodeSpec& spec) {
    if (const auto* g = std::get_if<GrsSpec>(&spec)) return std::min(g->n(), 2 * g->k - 1);
    const auto& h = std::get<HermitianSpec>(spec);
    HermitianSpec doubled = h;
    doubled.m = 2 * h.m;
    return hermitian_code_dim(doubled);
}

unsigned default_error_capacity(const CodeSpec& spec) {
    if (const auto* g = std::get_if<GrsSpec>(&spec)) return unsigned((g->n() - g->k) / 2);
    const auto& h = std::get<HermitianSpec>(spec);
    const int g = int(h.genus());
    const int d_star = h.m - 2 * g + 2;  // designed distance of the dual divisor
    const int t = (d_star - 1 - g) / 2;
    return unsigned(std::max(1, t));
}

unsigned max_error_capacity(const CodeSpec& spec) {
    if (const auto* g = std::get_if<GrsSpec>(&spec)) return unsigned((g->n() - g->k) / 2);
    const auto& h = std::get<HermitianSpec>(spec);
    const int slack = int(h.n()) - h.m - 1 - int(h.genus());
    if (slack < 0) throw std::invalid_argument("divisor degree too large to decode");
    return unsigned(slack / 2);
}

KeyPair keygen(const CodeSpec& spec, std::size_t l, std::uint64_t seed, std::optional<unsigned> t_override,
               bool permute_columns) {
    const LinearCode code = enclosing_code(spec);
    const std::size_t k = code.k();
    if (l == 0 || l > k) throw std::invalid_argument("keygen: subcode dimension out of range");

    Rng rng(seed);
    const std::uint32_t q = code.field().q();
    Matrix sel(code.field_ptr(), l, k);
    do {
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < k; ++j) sel.at(i, j) = FElem(rng.below(q));
    } while (rref(sel).rank != l);

    Matrix g_pub = sel.mul(code.gen());
    std::vector<std::size_t> permutation;
    if (permute_columns) {
        permutation.resize(code.n());
        for (std::size_t i = 0; i < permutation.size(); ++i) permutation[i] = i;
        for (std::size_t i = permutation.size() - 1; i > 0; --i)
            std::swap(permutation[i], permutation[rng.below(i + 1)]);
        Matrix permuted(code.field_ptr(), l, code.n());
        for (std::size_t r = 0; r < l; ++r)
            for (std::size_t j = 0; j < code.n(); ++j) permuted.at(r, permutation[j]) = g_pub.at(r, j);
        g_pub = std::move(permuted);
    }

    KeyPair kp{
        .pub = PublicKey{code.field_ptr(), std::move(g_pub), t_override ? *t_override : default_error_capacity(spec)},
        .sec = SecretKey{spec, sel, seed, permutation},
        .resistant_by_pair_bound = false,
        .pair_bound = l * (l + 1) / 2,
        .square_dim = spec_square_dim(spec),
    };
    kp.resistant_by_pair_bound = kp.pair_bound < kp.square_dim;
    return kp;
}

Vec encrypt_with_weight(const PublicKey& pk, std::span<const FElem> msg, std::size_t weight, std::uint64_t seed) {
    if (msg.size() != pk.l()) throw std::invalid_argument("encrypt: message length != l");
    if (weight > pk.n()) throw std::invalid_argument("encrypt: weight exceeds length");
    Vec word = pk.g_pub.mul_left(msg);

    Rng rng(seed);
    const Field& f = *pk.field;
    std::vector<std::size_t> positions;
    while (positions.size() < weight) {
        const std::size_t pos = rng.below(pk.n());
        if (std::find(positions.begin(), positions.end(), pos) == positions.end()) positions.push_back(pos);
    }
    for (std::size_t pos : positions) {
        const FElem value = FElem(1 + rng.below(f.q() - 1));
        word[pos] = f.add(word[pos], value);
    }
    return word;
}

Vec encrypt(const PublicKey& pk, std::span<const FElem> msg, std::uint64_t seed) {
    return encrypt_with_weight(pk, msg, pk.t, seed);
}

MessageSolver::MessageSolver(Matrix g) : g_(std::move(g)), inverse_(g_.field_ptr(), 0, 0) {
    const std::size_t l = g_.rows();
    const auto red = rref(g_);
    if (red.rank != l) throw std::invalid_argument("message solver needs a full-row-rank generator");
    pivot_cols_ = red.pivots;
    // invert the l x l pivot submatrix: kernel of [G_J | I] style augmentation
    Matrix sub = g_.columns(pivot_cols_);  // l x l
    Matrix aug(g_.field_ptr(), l, 2 * l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) aug.at(i, j) = sub.at(i, j);
        aug.at(i, l + i) = 1;
    }
    const auto inv_red = rref(aug);
    Matrix inv(g_.field_ptr(), l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) inv.at(i, j) = inv_red.matrix.at(i, l + j);
    inverse_ = std::move(inv);
}

std::optional<Vec> MessageSolver::solve_message(std::span<const FElem> word) const {
    Vec picked(pivot_cols_.size());
    for (std::size_t i = 0; i < picked.size(); ++i) picked[i] = word[pivot_cols_[i]];
    // x * G_J = picked  =>  x = picked * G_J^{-1}
    Vec x = inverse_.mul_left(picked);
    if (g_.mul_left(x) != Vec(word.begin(), word.end())) return std::nullopt;
    return x;
}

Decrypter::Decrypter(const SecretKey& sk)
    : decoder_([&] {
          const unsigned cap = max_error_capacity(sk.spec);
          if (const auto* g = std::get_if<GrsSpec>(&sk.spec)) return EcpDecoder(build_ecp_grs(*g, cap));
          return EcpDecoder(build_ecp_hermitian(std::get<HermitianSpec>(sk.spec), cap));
      }()),
      solver_(sk.s.mul(enclosing_code(sk.spec).gen())),
      permutation_(sk.permutation) {}

std::optional<Vec> Decrypter::decrypt(std::span<const FElem> ciphertext) const {
    Vec received(ciphertext.begin(), ciphertext.end());
    if (!permutation_.empty()) {
        if (permutation_.size() != received.size()) return std::nullopt;
        Vec unpermuted(received.size());
        for (std::size_t j = 0; j < received.size(); ++j) unpermuted[j] = received[permutation_[j]];
        received = std::move(unpermuted);
    }
    const auto codeword = decoder_.decode(received);
    if (!codeword) return std::nullopt;
    return solver_.solve_message(*codeword);
}

std::optional<Vec> decrypt(const SecretKey& sk, std::span<const FElem> ciphertext) {
    return Decrypter(sk).decrypt(ciphertext);
}

}  // namespace mcsub
