#include "mcsub/field.hpp"

#include <stdexcept>

namespace mcsub {

namespace {

// Polynomials over GF(p) as coefficient vectors, ascending degree.
using Poly = std::vector<unsigned>;

int poly_deg(const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[std::size_t(i)] != 0) return i;
    return -1;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
    const int dg = poly_deg(g);
    for (int df = poly_deg(f); df >= dg && dg >= 0; df = poly_deg(f)) {
        const unsigned lead = f[std::size_t(df)];
        for (int i = 0; i <= dg; ++i) {
            unsigned& c = f[std::size_t(df - dg + i)];
            c = (c + p * lead - lead * g[std::size_t(i)] % p) % p;
        }
    }
    return f;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

Poly poly_from_code(std::uint64_t code, unsigned p) {
    Poly f;
    while (code) {
        f.push_back(unsigned(code % p));
        code /= p;
    }
    return f;
}

// Irreducibility by trial division: no monic divisor of degree 1..deg/2.
bool poly_irreducible(const Poly& f, unsigned p) {
    const int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    std::uint64_t pk = p;  // p^1
    for (int dd = 1; dd <= d / 2; ++dd, pk *= p) {
        // monic candidates of degree dd: code = pk + w, w < pk
        for (std::uint64_t w = 0; w < pk; ++w) {
            Poly g = poly_from_code(pk + w, p);
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(unsigned p, unsigned m) {
    std::uint64_t pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    for (std::uint64_t w = 0; w < pm; ++w) {
        Poly f = poly_from_code(pm + w, p);
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::pair<unsigned, unsigned> factor_prime_power(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d != 0) continue;
        unsigned e = 0;
        std::uint32_t r = q;
        while (r % d == 0) {
            r /= d;
            ++e;
        }
        if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
        return {d, e};
    }
    throw std::invalid_argument("not a prime power: " + std::to_string(q));
}

Field::Field(unsigned p, unsigned m) : Field(p, m, smallest_irreducible(p, m)) {}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (m_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m_; ++i) {
        q *= p_;
        if (q > 65536) throw std::invalid_argument("field order above 2^16 not supported");
    }
    q_ = std::uint32_t(q);
    if (modulus_.size() != m_ + 1) throw std::invalid_argument("modulus must have m+1 coefficients");
    for (unsigned c : modulus_)
        if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus_[m_] != 1) throw std::invalid_argument("modulus must be monic");
    if (m_ > 1 && !poly_irreducible(modulus_, p_)) throw std::invalid_argument("modulus is reducible");
    build_tables();
}

FElem Field::add_generic(FElem a, FElem b) const {
    std::uint32_t out = 0, mult = 1, x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        out += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return FElem(out);
}

FElem Field::neg_generic(FElem a) const {
    std::uint32_t out = 0, mult = 1, x = a;
    for (unsigned i = 0; i < m_; ++i) {
        out += (p_ - x % p_) % p_ * mult;
        x /= p_;
        mult *= p_;
    }
    return FElem(out);
}

FElem Field::mul_nomod_table(FElem a, FElem b) const {
    // schoolbook product of the coefficient vectors, reduced by the modulus
    std::vector<unsigned> prod(2 * m_ - 1, 0);
    std::uint32_t x = a;
    for (unsigned i = 0; i < m_; ++i, x /= p_) {
        const unsigned xi = x % p_;
        if (xi == 0) continue;
        std::uint32_t y = b;
        for (unsigned j = 0; j < m_; ++j, y /= p_) prod[i + j] = (prod[i + j] + xi * (y % p_)) % p_;
    }
    for (int d = int(prod.size()) - 1; d >= int(m_); --d) {
        const unsigned lead = prod[std::size_t(d)];
        if (lead == 0) continue;
        prod[std::size_t(d)] = 0;
        for (unsigned i = 0; i < m_; ++i) {
            unsigned& c = prod[std::size_t(d) - m_ + i];
            c = (c + p_ * lead - lead * modulus_[i] % p_) % p_;
        }
    }
    std::uint32_t out = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += prod[i] * mult;
        mult *= p_;
    }
    return FElem(out);
}

void Field::build_tables() {
    // primitive element: smallest index of multiplicative order q-1
    const auto factors = prime_factors(q_ - 1);
    auto pow_generic = [&](FElem base, std::uint32_t e) {
        FElem r = 1, b = base;
        while (e) {
            if (e & 1) r = mul_nomod_table(r, b);
            b = mul_nomod_table(b, b);
            e >>= 1;
        }
        return r;
    };
    primitive_ = 1;
    if (q_ > 2) {
        for (FElem cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (std::uint32_t r : factors)
                if (pow_generic(cand, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                primitive_ = cand;
                break;
            }
        }
    }

    exp_.assign(2 * std::size_t(q_ - 1), 0);
    log_.assign(q_, 0);
    FElem cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + q_ - 1] = cur;
        log_[cur] = std::uint16_t(i);
        cur = mul_nomod_table(cur, primitive_);
    }

    inv_.assign(q_, 0);
    for (std::uint32_t x = 1; x < q_; ++x) inv_[x] = exp_[(q_ - 1 - log_[x]) % (q_ - 1)];

    constexpr std::uint32_t kTableLimit = 1024;
    if (q_ <= kTableLimit) {
        mul_table_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                mul_table_[std::size_t(a) * q_ + b] = exp_[std::size_t(log_[a]) + log_[b]];
        if (p_ != 2) {
            add_table_.assign(std::size_t(q_) * q_, 0);
            neg_table_.assign(q_, 0);
            for (std::uint32_t a = 0; a < q_; ++a) {
                neg_table_[a] = neg_generic(FElem(a));
                for (std::uint32_t b = 0; b < q_; ++b)
                    add_table_[std::size_t(a) * q_ + b] = add_generic(FElem(a), FElem(b));
            }
        }
    }
}

FElem Field::inv(FElem a) const {
    if (a == 0) throw std::invalid_argument("inversion of zero in " + description());
    return inv_[a];
}

FElem Field::pow(FElem a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::invalid_argument("negative power of zero");
    }
    const long long ord = q_ - 1;
    long long r = (std::int64_t(log_[a]) * (e % ord)) % ord;
    if (r < 0) r += ord;
    return exp_[std::size_t(r)];
}

void Field::row_axpy(FElem coef, std::span<const FElem> src, std::span<FElem> dst) const {
    if (coef == 0) return;
    const std::size_t len = src.size();
    if (!mul_table_.empty()) {
        const FElem* mrow = mul_table_.data() + std::size_t(coef) * q_;
        if (p_ == 2) {
            for (std::size_t i = 0; i < len; ++i) dst[i] ^= mrow[src[i]];
        } else {
            const FElem* at = add_table_.data();
            for (std::size_t i = 0; i < len; ++i) dst[i] = at[std::size_t(dst[i]) * q_ + mrow[src[i]]];
        }
        return;
    }
    const std::uint32_t lc = log_[coef];
    if (p_ == 2) {
        for (std::size_t i = 0; i < len; ++i)
            if (src[i]) dst[i] ^= exp_[lc + log_[src[i]]];
    } else {
        for (std::size_t i = 0; i < len; ++i)
            if (src[i]) dst[i] = add(dst[i], exp_[lc + log_[src[i]]]);
    }
}

void Field::row_scale(FElem coef, std::span<FElem> row) const {
    if (coef == 1) return;
    if (!mul_table_.empty()) {
        const FElem* mrow = mul_table_.data() + std::size_t(coef) * q_;
        for (auto& x : row) x = mrow[x];
        return;
    }
    if (coef == 0) {
        for (auto& x : row) x = 0;
        return;
    }
    const std::uint32_t lc = log_[coef];
    for (auto& x : row)
        if (x) x = exp_[lc + log_[x]];
}

void Field::row_hadamard(std::span<const FElem> a, std::span<const FElem> b, std::span<FElem> out) const {
    const std::size_t len = a.size();
    if (!mul_table_.empty()) {
        const FElem* mt = mul_table_.data();
        for (std::size_t i = 0; i < len; ++i) out[i] = mt[std::size_t(a[i]) * q_ + b[i]];
        return;
    }
    for (std::size_t i = 0; i < len; ++i) out[i] = mul(a[i], b[i]);
}

FElem Field::dot(std::span<const FElem> a, std::span<const FElem> b) const {
    FElem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
    return acc;
}

FElem Field::dot3(std::span<const FElem> a, std::span<const FElem> b, std::span<const FElem> c) const {
    FElem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(mul(a[i], b[i]), c[i]));
    return acc;
}

std::string Field::description() const {
    if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

FieldPtr make_field(unsigned p, unsigned m) { return std::make_shared<const Field>(p, m); }

FieldPtr make_field(unsigned p, unsigned m, std::vector<unsigned> modulus) {
    return std::make_shared<const Field>(p, m, std::move(modulus));
}

FieldPtr make_field_of_order(std::uint32_t q) {
    const auto [p, e] = factor_prime_power(q);
    return make_field(p, e);
}

}  // namespace mcsub
