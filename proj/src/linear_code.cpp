#include "mcsub/linear_code.hpp"

#include <stdexcept>

#include "mcsub/rng.hpp"

namespace mcsub {

namespace {

void check_compatible(const LinearCode& a, const LinearCode& b, const char* what) {
    if (a.n() != b.n() || !(a.field() == b.field()))
        throw std::invalid_argument(std::string(what) + ": length or field mismatch");
}

}  // namespace

LinearCode LinearCode::from_rows(const Matrix& rows) { return LinearCode(rref(rows).matrix); }

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n)); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) { return LinearCode(Matrix::identity(std::move(field), n)); }

bool LinearCode::contains(std::span<const FElem> word) const {
    if (word.size() != n_) throw std::invalid_argument("word length mismatch");
    Vec residual(word.begin(), word.end());
    const Field& f = field();
    // gen_ is RREF: one elimination per row
    const auto pivots = [&] {
        std::vector<std::size_t> p(k());
        for (std::size_t r = 0; r < k(); ++r) {
            std::size_t j = 0;
            while (gen_.at(r, j) == 0) ++j;
            p[r] = j;
        }
        return p;
    }();
    for (std::size_t r = 0; r < k(); ++r) {
        const FElem c = residual[pivots[r]];
        if (c != 0) f.row_axpy(f.neg(c), gen_.row(r), residual);
    }
    return hamming_weight(residual) == 0;
}

bool LinearCode::contains(const LinearCode& sub) const {
    if (sub.n() != n_) return false;
    for (std::size_t r = 0; r < sub.k(); ++r)
        if (!contains(sub.gen().row(r))) return false;
    return true;
}

LinearCode dual(const LinearCode& c) { return LinearCode::from_rows(kernel(c.gen())); }

LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
    check_compatible(a, b, "schur_product");
    const std::size_t n = a.n();
    if (a.is_zero() || b.is_zero()) return LinearCode::zero(a.field_ptr(), n);
    const bool same = a == b;
    const Field& f = a.field();
    EchelonBasis basis(a.field_ptr(), n);
    Vec prod(n);
    for (std::size_t i = 0; i < a.k() && !basis.is_full(); ++i) {
        for (std::size_t j = same ? i : 0; j < b.k(); ++j) {
            f.row_hadamard(a.gen().row(i), b.gen().row(j), prod);
            basis.insert(prod);
            if (basis.is_full()) break;
        }
    }
    return LinearCode::from_rows(basis.to_matrix());
}

LinearCode schur_power(const LinearCode& c, unsigned t) {
    if (t < 1) throw std::invalid_argument("schur_power requires t >= 1");
    LinearCode acc = c;
    for (unsigned i = 1; i < t; ++i) acc = schur_product(c, acc);
    return acc;
}

LinearCode closure(const LinearCode& c, unsigned t, ClosureMode mode) {
    if (t < 2) throw std::invalid_argument("closure requires t >= 2");
    const LinearCode pow_t1 = schur_power(c, t - 1);
    const LinearCode pow_t = schur_product(c, pow_t1);

    auto by_formula = [&] { return dual(schur_product(pow_t1, dual(pow_t))); };
    auto by_definition = [&] {
        // a is in the closure iff <a, u * h> = 0 for every basis vector u of
        // C^(t-1) and every parity check h of C^(t).
        const Matrix parity = kernel(pow_t.gen());
        Matrix system(c.field_ptr(), pow_t1.k() * parity.rows(), c.n());
        std::size_t r = 0;
        for (std::size_t i = 0; i < pow_t1.k(); ++i)
            for (std::size_t j = 0; j < parity.rows(); ++j, ++r)
                c.field().row_hadamard(pow_t1.gen().row(i), parity.row(j), system.row(r));
        return LinearCode::from_rows(kernel(system));
    };

    switch (mode) {
        case ClosureMode::kFormula:
            return by_formula();
        case ClosureMode::kDefinitional:
            return by_definition();
        case ClosureMode::kCrossValidate: {
            LinearCode a = by_formula();
            LinearCode b = by_definition();
            if (a != b) throw std::logic_error("closure cross-validation mismatch");
            return a;
        }
    }
    throw std::logic_error("unreachable");
}

LinearCode shorten(const LinearCode& c, const PositionSet& positions) {
    for (std::size_t p : positions)
        if (p >= c.n()) throw std::invalid_argument("shorten: position out of range");
    if (positions.empty()) return c;
    // x * gen must vanish on the positions: x in the kernel of those columns.
    std::vector<std::size_t> idx(positions.begin(), positions.end());
    const Matrix coeffs = kernel(c.gen().columns(idx).transposed());
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c.n(); ++j)
        if (!positions.count(j)) keep.push_back(j);
    return LinearCode::from_rows(coeffs.mul(c.gen()).columns(keep));
}

LinearCode puncture(const LinearCode& c, const PositionSet& positions) {
    for (std::size_t p : positions)
        if (p >= c.n()) throw std::invalid_argument("puncture: position out of range");
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < c.n(); ++j)
        if (!positions.count(j)) keep.push_back(j);
    return LinearCode::from_rows(c.gen().columns(keep));
}

LinearCode extend_by_zeros(const LinearCode& c, const PositionSet& positions, std::size_t n_total) {
    if (c.n() + positions.size() != n_total) throw std::invalid_argument("extend_by_zeros: size mismatch");
    for (std::size_t p : positions)
        if (p >= n_total) throw std::invalid_argument("extend_by_zeros: position out of range");
    std::vector<std::size_t> target;
    for (std::size_t j = 0; j < n_total; ++j)
        if (!positions.count(j)) target.push_back(j);
    Matrix wide(c.field_ptr(), c.k(), n_total);
    for (std::size_t r = 0; r < c.k(); ++r)
        for (std::size_t j = 0; j < c.n(); ++j) wide.at(r, target[j]) = c.gen().at(r, j);
    return LinearCode::from_rows(wide);
}

LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
    check_compatible(a, b, "sum_codes");
    return LinearCode::from_rows(a.gen().stacked(b.gen()));
}

LinearCode intersect_codes(const LinearCode& a, const LinearCode& b) {
    check_compatible(a, b, "intersect_codes");
    return dual(sum_codes(dual(a), dual(b)));
}

LinearCode random_subcode(const LinearCode& c, std::size_t l, std::uint64_t seed) {
    if (l == 0 || l > c.k()) throw std::invalid_argument("random_subcode: dimension out of range");
    Rng rng(seed);
    for (;;) {
        Matrix sel(c.field_ptr(), l, c.k());
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < c.k(); ++j) sel.at(i, j) = FElem(rng.below(c.field().q()));
        if (rref(sel).rank != l) continue;
        return LinearCode::from_rows(sel.mul(c.gen()));
    }
}

LinearCode random_code(FieldPtr field, std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) throw std::invalid_argument("random_code: k > n");
    Rng rng(seed);
    for (;;) {
        Matrix gen(field, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) gen.at(i, j) = FElem(rng.below(field->q()));
        LinearCode c = LinearCode::from_rows(gen);
        if (c.k() == k) return c;
    }
}

std::size_t min_distance_bruteforce(const LinearCode& c) {
    if (c.is_zero()) throw std::invalid_argument("minimum distance of the zero code is undefined");
    const Field& f = c.field();
    double size = 1;
    for (std::size_t i = 0; i < c.k(); ++i) size *= f.q();
    if (size > double(1 << 24)) throw std::invalid_argument("min_distance_bruteforce: instance too large");

    // odometer over message vectors, updating the codeword incrementally
    Vec msg(c.k(), 0), word(c.n(), 0);
    std::size_t best = c.n() + 1;
    const std::uint64_t total = std::uint64_t(size);
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t d = 0;
        while (true) {
            const FElem old = msg[d];
            const FElem fresh = FElem((old + 1u) % f.q());
            msg[d] = fresh;
            f.row_axpy(f.sub(fresh, old), c.gen().row(d), word);
            if (fresh != 0) break;
            ++d;  // carried
        }
        best = std::min(best, hamming_weight(word));
    }
    return best;
}

}  // namespace mcsub
