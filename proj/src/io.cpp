#include "mcsub/io.hpp"

#include <fstream>
#include <sstream>

namespace mcsub {

namespace {

// Line-oriented tokenizer that remembers positions for error messages.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::size_t line_no() const { return line_no_; }

    std::vector<std::string> tokens(const char* expectation) {
        std::string line;
        if (!std::getline(in_, line)) throw ParseError(line_no_ + 1, std::string("missing line, expected ") + expectation);
        ++line_no_;
        std::istringstream iss(line);
        std::vector<std::string> out;
        std::string tok;
        while (iss >> tok) out.push_back(tok);
        if (out.empty()) throw ParseError(line_no_, std::string("empty line, expected ") + expectation);
        return out;
    }

    std::uint64_t to_u64(const std::string& tok, const char* what) const {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw ParseError(line_no_, std::string("bad ") + what + ": '" + tok + "'");
        }
    }

    long long to_i64(const std::string& tok, const char* what) const {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw ParseError(line_no_, std::string("bad ") + what + ": '" + tok + "'");
        }
    }

  private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

FieldPtr parse_field(LineReader& r) {
    const auto toks = r.tokens("field line 'GF p m c0 ... cm'");
    if (toks[0] != "GF") throw ParseError(r.line_no(), "expected field line starting with GF, got '" + toks[0] + "'");
    if (toks.size() < 3) throw ParseError(r.line_no(), "field line needs p and m");
    const unsigned p = unsigned(r.to_u64(toks[1], "characteristic"));
    const unsigned m = unsigned(r.to_u64(toks[2], "extension degree"));
    if (toks.size() != 3 + m + 1) throw ParseError(r.line_no(), "field line needs m+1 modulus coefficients");
    std::vector<unsigned> modulus;
    for (std::size_t i = 3; i < toks.size(); ++i) modulus.push_back(unsigned(r.to_u64(toks[i], "modulus coefficient")));
    try {
        return make_field(p, m, std::move(modulus));
    } catch (const std::exception& e) {
        throw ParseError(r.line_no(), std::string("invalid field: ") + e.what());
    }
}

FElem parse_elem(LineReader& r, const std::string& tok, const Field& f) {
    const std::uint64_t v = r.to_u64(tok, "field element");
    if (v >= f.q()) throw ParseError(r.line_no(), "element index " + tok + " out of range for " + f.description());
    return FElem(v);
}

Matrix parse_matrix(LineReader& r, const FieldPtr& f) {
    const auto dims = r.tokens("matrix dimensions '<rows> <cols>'");
    if (dims.size() != 2) throw ParseError(r.line_no(), "matrix dimension line needs exactly rows and cols");
    const std::size_t rows = r.to_u64(dims[0], "row count");
    const std::size_t cols = r.to_u64(dims[1], "column count");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto toks = r.tokens("matrix row");
        if (toks.size() != cols) throw ParseError(r.line_no(), "matrix row has " + std::to_string(toks.size()) +
                                                                   " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = parse_elem(r, toks[j], *f);
    }
    return m;
}

Vec parse_row(LineReader& r, const Field& f, const char* what) {
    const auto toks = r.tokens(what);
    Vec out;
    out.reserve(toks.size());
    for (const auto& t : toks) out.push_back(parse_elem(r, t, f));
    return out;
}

void write_row(std::ostream& out, std::span<const FElem> row) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
}

}  // namespace

std::string format_field(const Field& f) {
    std::string s = "GF " + std::to_string(f.p()) + " " + std::to_string(f.m());
    for (unsigned c : f.modulus()) s += " " + std::to_string(c);
    return s;
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) write_row(out, m.row(i));
}

void write_code(std::ostream& out, const LinearCode& c) {
    out << format_field(c.field()) << "\n";
    out << "CODE " << c.n() << " " << c.k() << "\n";
    write_matrix(out, c.gen());
}

LinearCode read_code(std::istream& in) {
    LineReader r(in);
    FieldPtr f = parse_field(r);
    const auto head = r.tokens("'CODE n k'");
    if (head.size() != 3 || head[0] != "CODE") throw ParseError(r.line_no(), "expected 'CODE <n> <k>'");
    const std::size_t n = r.to_u64(head[1], "length");
    const std::size_t k = r.to_u64(head[2], "dimension");
    const Matrix gen = parse_matrix(r, f);
    if (gen.rows() != k || gen.cols() != n) throw ParseError(r.line_no(), "generator block does not match CODE header");
    LinearCode c = LinearCode::from_rows(gen);
    if (c.k() != k) throw ParseError(r.line_no(), "generator rows are not independent");
    return c;
}

void write_public_key(std::ostream& out, const PublicKey& pk) {
    out << "MCSUB-PUB v1\n";
    out << format_field(*pk.field) << "\n";
    out << pk.n() << " " << pk.l() << " " << pk.t << "\n";
    write_matrix(out, pk.g_pub);
}

PublicKey read_public_key(std::istream& in) {
    LineReader r(in);
    const auto magic = r.tokens("'MCSUB-PUB v1'");
    if (magic.size() != 2 || magic[0] != "MCSUB-PUB" || magic[1] != "v1")
        throw ParseError(r.line_no(), "not a public key file (bad magic)");
    FieldPtr f = parse_field(r);
    const auto head = r.tokens("'n l t'");
    if (head.size() != 3) throw ParseError(r.line_no(), "expected '<n> <l> <t>'");
    const std::size_t n = r.to_u64(head[0], "length");
    const std::size_t l = r.to_u64(head[1], "dimension");
    const unsigned t = unsigned(r.to_u64(head[2], "error capacity"));
    const Matrix g = parse_matrix(r, f);
    if (g.rows() != l || g.cols() != n) throw ParseError(r.line_no(), "matrix block does not match key header");
    return PublicKey{std::move(f), g, t};
}

void write_secret_key(std::ostream& out, const SecretKey& sk) {
    out << "MCSUB-SEC v1\n";
    out << format_field(*spec_field(sk.spec)) << "\n";
    if (const auto* g = std::get_if<GrsSpec>(&sk.spec)) {
        out << "FAMILY grs " << g->k << "\n";
        write_row(out, g->a);
        write_row(out, g->b);
    } else {
        const auto& h = std::get<HermitianSpec>(sk.spec);
        out << "FAMILY hermitian\n";
        out << h.q0 << " " << h.m << "\n";
    }
    write_matrix(out, sk.s);
    if (!sk.permutation.empty()) {
        out << "PERM";
        for (std::size_t p : sk.permutation) out << " " << p;
        out << "\n";
    }
    out << sk.seed << "\n";
}

SecretKey read_secret_key(std::istream& in) {
    LineReader r(in);
    const auto magic = r.tokens("'MCSUB-SEC v1'");
    if (magic.size() != 2 || magic[0] != "MCSUB-SEC" || magic[1] != "v1")
        throw ParseError(r.line_no(), "not a secret key file (bad magic)");
    FieldPtr f = parse_field(r);
    const auto fam = r.tokens("'FAMILY grs|hermitian'");
    if (fam[0] != "FAMILY" || fam.size() < 2) throw ParseError(r.line_no(), "expected FAMILY line");
    CodeSpec spec = HermitianSpec{};
    if (fam[1] == "grs") {
        if (fam.size() != 3) throw ParseError(r.line_no(), "FAMILY grs needs the dimension k");
        GrsSpec g;
        g.field = f;
        g.k = r.to_u64(fam[2], "dimension");
        g.a = parse_row(r, *f, "evaluation points");
        g.b = parse_row(r, *f, "column multipliers");
        try {
            g.validate();
        } catch (const std::exception& e) {
            throw ParseError(r.line_no(), std::string("invalid grs parameters: ") + e.what());
        }
        spec = std::move(g);
    } else if (fam[1] == "hermitian") {
        const auto params = r.tokens("'q0 m'");
        if (params.size() != 2) throw ParseError(r.line_no(), "expected '<q0> <m>'");
        const unsigned q0 = unsigned(r.to_u64(params[0], "q0"));
        const int m = int(r.to_i64(params[1], "divisor degree"));
        HermitianSpec h = make_hermitian_spec(q0, m);
        if (!(*h.field == *f)) throw ParseError(r.line_no(), "field line does not match GF(q0^2)");
        spec = std::move(h);
    } else {
        throw ParseError(r.line_no(), "unknown family '" + fam[1] + "'");
    }
    const Matrix s = parse_matrix(r, f);
    auto seed_toks = r.tokens("seed (or optional PERM line)");
    std::vector<std::size_t> permutation;
    if (seed_toks[0] == "PERM") {
        const std::size_t n = spec_length(spec);
        if (seed_toks.size() != n + 1) throw ParseError(r.line_no(), "PERM line needs n entries");
        std::vector<bool> seen(n, false);
        for (std::size_t i = 1; i < seed_toks.size(); ++i) {
            const std::size_t p = r.to_u64(seed_toks[i], "permutation entry");
            if (p >= n || seen[p]) throw ParseError(r.line_no(), "not a permutation");
            seen[p] = true;
            permutation.push_back(p);
        }
        seed_toks = r.tokens("seed");
    }
    if (seed_toks.size() != 1) throw ParseError(r.line_no(), "seed line must hold a single integer");
    const std::uint64_t seed = r.to_u64(seed_toks[0], "seed");
    return SecretKey{std::move(spec), s, seed, std::move(permutation)};
}

void write_ciphertext(std::ostream& out, const Field& f, const Vec& y) {
    out << format_field(f) << "\n";
    write_row(out, y);
}

std::pair<FieldPtr, Vec> read_ciphertext(std::istream& in) {
    LineReader r(in);
    FieldPtr f = parse_field(r);
    Vec y = parse_row(r, *f, "ciphertext vector");
    return {std::move(f), std::move(y)};
}

void save_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mcsub
