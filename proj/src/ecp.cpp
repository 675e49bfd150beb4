#include "mcsub/ecp.hpp"

#include <stdexcept>

namespace mcsub {

EcpCertificate ecp_validate(const EcpPair& pair) {
    EcpCertificate cert;
    cert.dim_a = pair.a.k();
    cert.dim_b = pair.b.k();
    const std::size_t n = pair.c.n();
    auto fail = [&](const char* cond) {
        cert.pass = false;
        cert.failed_condition = cond;
        return cert;
    };
    if (pair.a.n() != n || pair.b.n() != n) return fail("length mismatch");
    if (!(pair.a.field() == pair.c.field()) || !(pair.b.field() == pair.c.field())) return fail("field mismatch");

    // A*B inside C^perp, by rank of the stacked generators
    const LinearCode cperp = dual(pair.c);
    if (!cperp.contains(schur_product(pair.a, pair.b))) return fail("A*B not in dual(C)");
    if (pair.a.k() < std::size_t(pair.t) + 1) return fail("dim A <= t");
    if (pair.d_bperp_lb <= pair.t) return fail("d(B^perp) <= t");
    if (pair.d_a_lb + pair.d_c_lb <= n) return fail("d(A) + d(C) <= n");
    cert.pass = true;
    return cert;
}

EcpPair build_ecp_grs(const GrsSpec& spec, unsigned t) {
    spec.validate();
    const std::size_t n = spec.n(), k = spec.k;
    if (2 * std::size_t(t) > n - k) throw std::invalid_argument("build_ecp_grs: t exceeds (n-k)/2");

    const Vec bperp = grs_dual_multipliers(*spec.field, spec.a, spec.b);
    Vec ones(n, 1);
    EcpPair pair{
        .a = grs_code(GrsSpec{spec.field, spec.a, ones, t + 1}),
        .b = grs_code(GrsSpec{spec.field, spec.a, bperp, n - k - t}),
        .c = grs_code(spec),
        .t = t,
        .d_a_lb = n - t,                // Singleton, exact for GRS
        .d_bperp_lb = n - (k + t) + 1,  // B^perp = GRS_{k+t}
        .d_c_lb = n - k + 1,
    };
    const auto cert = ecp_validate(pair);
    if (!cert.pass) throw std::logic_error("build_ecp_grs: validation failed: " + cert.failed_condition);
    return pair;
}

EcpPair build_ecp_hermitian(const HermitianSpec& spec, unsigned t) {
    const std::size_t n = spec.n();
    const int g = int(spec.genus());
    const int m = spec.m;
    if (int(2 * t) > int(n) - m - 1 - g)
        throw std::invalid_argument("build_ecp_hermitian: t exceeds (n - m - 1 - g)/2");
    const int m_dual = hermitian_dual(spec).m;
    const int deg_a = int(t) + g;
    const int deg_b = m_dual - deg_a;

    HermitianSpec sa = spec, sb = spec;
    sa.m = deg_a;
    sb.m = deg_b;
    EcpPair pair{
        .a = hermitian_code(sa),
        .b = hermitian_code(sb),
        .c = hermitian_code(spec),
        .t = t,
        // Goppa designed distances n - deg; B^perp = C((m + t + g) P_inf)
        .d_a_lb = n - std::size_t(deg_a),
        .d_bperp_lb = n - std::size_t(m + int(t) + g),
        .d_c_lb = n - std::size_t(m),
    };
    const auto cert = ecp_validate(pair);
    if (!cert.pass) throw std::logic_error("build_ecp_hermitian: validation failed: " + cert.failed_condition);
    return pair;
}

EcpDecoder::EcpDecoder(EcpPair pair) : pair_(std::move(pair)), parity_(kernel(pair_.c.gen())) {}

std::optional<Vec> EcpDecoder::decode(std::span<const FElem> received) const {
    const Field& f = pair_.c.field();
    const std::size_t n = pair_.c.n();
    if (received.size() != n) throw std::invalid_argument("received word length mismatch");
    const Matrix& agen = pair_.a.gen();
    const Matrix& bgen = pair_.b.gen();

    // kernel of T[j][i] = <A_i * y, B_j> locates the error positions
    Matrix t_mat(pair_.c.field_ptr(), bgen.rows(), agen.rows());
    for (std::size_t j = 0; j < bgen.rows(); ++j)
        for (std::size_t i = 0; i < agen.rows(); ++i)
            t_mat.at(j, i) = f.dot3(agen.row(i), bgen.row(j), received);
    const Matrix locator_coeffs = kernel(t_mat);
    if (locator_coeffs.rows() == 0) return std::nullopt;

    const Vec syndrome = parity_.mul_vec(received);

    for (std::size_t cand = 0; cand < locator_coeffs.rows(); ++cand) {
        const Vec locator = agen.mul_left(locator_coeffs.row(cand));
        std::vector<std::size_t> zeros;
        for (std::size_t pos = 0; pos < n; ++pos)
            if (locator[pos] == 0) zeros.push_back(pos);

        // erasure step: parity * e^T = syndrome with e supported on the zeros
        const Matrix sub = parity_.columns(zeros);
        if (rref(sub).rank != zeros.size()) continue;  // ambiguous solution
        const auto erased = solve(sub, syndrome);
        if (!erased) continue;  // inconsistent

        Vec error(n, 0);
        for (std::size_t idx = 0; idx < zeros.size(); ++idx) error[zeros[idx]] = (*erased)[idx];
        Vec word(received.begin(), received.end());
        for (std::size_t pos = 0; pos < n; ++pos) word[pos] = f.sub(word[pos], error[pos]);
        if (pair_.c.contains(word)) return word;
    }
    return std::nullopt;
}

std::optional<Vec> ecp_decode(const EcpPair& pair, std::span<const FElem> received) {
    return EcpDecoder(pair).decode(received);
}

}  // namespace mcsub
