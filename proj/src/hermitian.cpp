#include "mcsub/hermitian.hpp"

#include <stdexcept>

namespace mcsub {

HermitianSpec make_hermitian_spec(unsigned q0, int m) {
    const auto [p, e] = factor_prime_power(q0);
    HermitianSpec spec;
    spec.field = make_field(p, 2 * e);
    spec.q0 = q0;
    spec.m = m;
    return spec;
}

std::vector<std::pair<FElem, FElem>> hermitian_points(const HermitianSpec& spec) {
    const Field& f = *spec.field;
    if (f.q() != std::uint32_t(spec.q0) * spec.q0) throw std::invalid_argument("hermitian: field must be GF(q0^2)");
    std::vector<std::pair<FElem, FElem>> points;
    points.reserve(spec.n());
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        const FElem rhs = f.pow(FElem(x), spec.q0 + 1);
        for (std::uint32_t y = 0; y < f.q(); ++y) {
            const FElem lhs = f.add(f.pow(FElem(y), spec.q0), FElem(y));
            if (lhs == rhs) points.emplace_back(FElem(x), FElem(y));
        }
    }
    if (points.size() != spec.n()) throw std::logic_error("hermitian: affine point count != q0^3");
    return points;
}

std::vector<std::pair<unsigned, unsigned>> hermitian_monomials(const HermitianSpec& spec) {
    std::vector<std::pair<unsigned, unsigned>> monomials;
    if (spec.m < 0) return monomials;
    for (unsigned j = 0; j < spec.q0 && j * (spec.q0 + 1) <= unsigned(spec.m); ++j) {
        const unsigned imax = (unsigned(spec.m) - j * (spec.q0 + 1)) / spec.q0;
        for (unsigned i = 0; i <= imax; ++i) monomials.emplace_back(i, j);
    }
    return monomials;
}

LinearCode hermitian_code(const HermitianSpec& spec) {
    const auto points = hermitian_points(spec);
    const auto monomials = hermitian_monomials(spec);
    const Field& f = *spec.field;
    const std::size_t n = spec.n();

    // power tables per point, then one row per monomial
    unsigned imax = 0, jmax = 0;
    for (auto [i, j] : monomials) {
        imax = std::max(imax, i);
        jmax = std::max(jmax, j);
    }
    Matrix xpow(spec.field, imax + 1, n), ypow(spec.field, jmax + 1, n);
    for (std::size_t c = 0; c < n; ++c) {
        xpow.at(0, c) = 1;
        ypow.at(0, c) = 1;
        for (unsigned i = 1; i <= imax; ++i) xpow.at(i, c) = f.mul(xpow.at(i - 1, c), points[c].first);
        for (unsigned j = 1; j <= jmax; ++j) ypow.at(j, c) = f.mul(ypow.at(j - 1, c), points[c].second);
    }
    Matrix gen(spec.field, monomials.size(), n);
    for (std::size_t r = 0; r < monomials.size(); ++r)
        f.row_hadamard(xpow.row(monomials[r].first), ypow.row(monomials[r].second), gen.row(r));
    return LinearCode::from_rows(gen);
}

std::size_t hermitian_code_dim(const HermitianSpec& spec) {
    auto count = [&](int bound) -> std::size_t {
        HermitianSpec s = spec;
        s.m = bound;
        return hermitian_monomials(s).size();
    };
    const std::size_t dim_l = count(spec.m);
    const std::size_t correction = count(spec.m - int(spec.n()));
    return dim_l - correction;
}

HermitianSpec hermitian_dual(const HermitianSpec& spec) {
    HermitianSpec out = spec;
    out.m = int(spec.n()) + 2 * int(spec.genus()) - 2 - spec.m;
    return out;
}

}  // namespace mcsub
