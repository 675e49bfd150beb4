#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mcsub/mceliece.hpp"

namespace mcsub {

/// Parse failure carrying the 1-based line number and the offending content.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Field line: "GF <p> <m> <c0> ... <cm>" (modulus coefficients ascending).
std::string format_field(const Field& f);

// Matrix block: "<rows> <cols>" then one line of element indices per row.
void write_matrix(std::ostream& out, const Matrix& m);

// Code file: field line, "CODE <n> <k>", generator matrix block.
void write_code(std::ostream& out, const LinearCode& c);
LinearCode read_code(std::istream& in);

// Public key file: "MCSUB-PUB v1", field line, "<n> <l> <t>", matrix block.
void write_public_key(std::ostream& out, const PublicKey& pk);
PublicKey read_public_key(std::istream& in);

// Secret key file: "MCSUB-SEC v1", field line, "FAMILY grs|hermitian", the
// family parameters (a row and b row, or "q0 m"), S matrix block, seed line.
void write_secret_key(std::ostream& out, const SecretKey& sk);
SecretKey read_secret_key(std::istream& in);

// Ciphertext file: field line, then the vector on a single line.
void write_ciphertext(std::ostream& out, const Field& f, const Vec& y);
std::pair<FieldPtr, Vec> read_ciphertext(std::istream& in);

// Whole-file helpers.
void save_file(const std::string& path, const std::string& contents);
std::string load_file(const std::string& path);

}  // namespace mcsub
