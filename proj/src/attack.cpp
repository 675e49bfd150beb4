#include "mcsub/attack.hpp"

#include <algorithm>
#include <chrono>

#include "mcsub/rng.hpp"

namespace mcsub {

namespace {

class StageClock {
  public:
    explicit StageClock(StageTimes& times) : times_(times), last_(std::chrono::steady_clock::now()) {}
    void lap(const std::string& stage) {
        const auto now = std::chrono::steady_clock::now();
        times_[stage] = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
        last_ = now;
    }

  private:
    StageTimes& times_;
    std::chrono::steady_clock::time_point last_;
};

}  // namespace

DistinguisherReport distinguish(const LinearCode& c) {
    DistinguisherReport report;
    report.l = c.k();
    report.sq_dim = schur_power(c, 2).k();
    report.random_expectation = std::min(c.n(), c.k() * (c.k() + 1) / 2);
    report.algebraic_like = report.sq_dim < report.random_expectation;
    return report;
}

RecoveryResult attack_recover_code(const LinearCode& c_pub) {
    const LinearCode sq = schur_power(c_pub, 2);
    const bool degenerate = sq.is_full();
    return RecoveryResult{dual(schur_product(c_pub, dual(sq))), degenerate, sq.k()};
}

std::size_t shortening_size_for_degree(std::size_t deg, std::size_t n) {
    // deg - s <= (n - s - 2)/2  <=>  s >= 2*deg - n + 2
    const long s = 2 * long(deg) - long(n) + 2;
    return s > 0 ? std::size_t(s) : 0;
}

ShorteningResult attack_with_shortening(const LinearCode& c_pub, std::size_t s, std::size_t trials,
                                        std::uint64_t seed) {
    const std::size_t n = c_pub.n();
    if (s >= n) throw std::invalid_argument("shortening size must be below the length");
    LinearCode sum = LinearCode::zero(c_pub.field_ptr(), n);
    bool any_useful = false;
    std::size_t used = 0;
    LinearCode previous = sum;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        ++used;
        Rng rng(trial_seed(seed, trial));
        PositionSet positions;
        while (positions.size() < s) positions.insert(rng.below(n));
        const LinearCode shortened = shorten(c_pub, positions);
        if (shortened.is_zero()) continue;
        const RecoveryResult rec = attack_recover_code(shortened);
        if (rec.closure_degenerate) continue;
        any_useful = true;
        sum = sum_codes(sum, extend_by_zeros(rec.code, positions, n));
        if (trial > 0 && sum == previous) break;  // converged
        previous = sum;
    }
    return ShorteningResult{std::move(sum), !any_useful, used};
}

namespace {

// Fits tau = alpha*p / (gamma*p + delta) through the data points; the zero of
// the denominator is the sought evaluation point.  Fails when the fit is not
// unique up to scale.
std::optional<FElem> fit_pole(const FieldPtr& field, const Vec& ps, const Vec& taus) {
    const Field& f = *field;
    Matrix sys(field, ps.size(), 3);
    for (std::size_t r = 0; r < ps.size(); ++r) {
        sys.at(r, 0) = ps[r];
        sys.at(r, 1) = f.neg(f.mul(taus[r], ps[r]));
        sys.at(r, 2) = f.neg(taus[r]);
    }
    const Matrix ker = kernel(sys);
    if (ker.rows() != 1) return std::nullopt;
    const FElem gamma = ker.at(0, 1), delta = ker.at(0, 2);
    if (gamma == 0) return std::nullopt;  // pole at infinity: not an affine point
    return f.neg(f.div(delta, gamma));
}

SsResult ss_fail(const std::string& reason) {
    SsResult r;
    r.reason = reason;
    return r;
}

Vec first_elements(std::size_t n) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = FElem(i);
    return v;
}

}  // namespace

std::optional<Vec> recover_multipliers(const LinearCode& c_pub, const Vec& a, std::size_t k) {
    const Field& f = c_pub.field();
    const std::size_t n = c_pub.n();
    if (a.size() != n || k >= n) return std::nullopt;
    {
        Vec sorted = a;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    }

    // gamma with <c, gamma * a^j> = 0 for all generator rows c, j < n-k; the
    // dual multipliers of any containing GRS_k(a, .) solve this system.
    Matrix sys(c_pub.field_ptr(), c_pub.k() * (n - k), n);
    std::size_t r = 0;
    for (std::size_t row = 0; row < c_pub.k(); ++row) {
        Vec power(n, 1);
        for (std::size_t j = 0; j < n - k; ++j, ++r) {
            for (std::size_t i = 0; i < n; ++i) sys.at(r, i) = f.mul(c_pub.gen().at(row, i), power[i]);
            f.row_hadamard(power, a, power);
        }
    }
    const Matrix ker = kernel(sys);
    if (ker.rows() != 1) return std::nullopt;

    Vec gamma = ker.row_vec(0);
    for (FElem g : gamma)
        if (g == 0) return std::nullopt;
    Vec b(n);
    for (std::size_t i = 0; i < n; ++i) {
        FElem prod = gamma[i];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = f.mul(prod, f.sub(a[i], a[j]));
        b[i] = f.inv(prod);
    }
    GrsSpec candidate{c_pub.field_ptr(), a, b, k};
    if (!grs_code(candidate).contains(c_pub)) return std::nullopt;
    return b;
}

SsResult ss_recover(const LinearCode& c, std::size_t k) {
    const Field& f = c.field();
    const FieldPtr field = c.field_ptr();
    const std::size_t n = c.n();
    if (c.k() != k) return ss_fail("dimension mismatch");
    if (n > f.q()) return ss_fail("length exceeds the field (no affine point set)");
    if (k == 0 || k >= n) return ss_fail("dimension outside 1 <= k < n");

    auto certify = [&](Vec a, Vec b) -> SsResult {
        GrsSpec spec{field, a, b, k};
        try {
            if (grs_code(spec) != c) return ss_fail("reconstruction equality failed");
        } catch (const std::exception&) {
            return ss_fail("reconstruction equality failed");
        }
        SsResult r;
        r.success = true;
        r.a = std::move(a);
        r.b = std::move(b);
        return r;
    };

    if (k == 1) {
        Vec b = c.gen().row_vec(0);
        if (std::find(b.begin(), b.end(), 0) != b.end()) return ss_fail("spanning vector has zeros");
        return certify(first_elements(n), std::move(b));
    }
    if (k == n - 1) {
        // dual is one-dimensional: read the dual multipliers straight off it
        const Vec h = dual(c).gen().row_vec(0);
        if (std::find(h.begin(), h.end(), 0) != h.end()) return ss_fail("dual spanning vector has zeros");
        const Vec a = first_elements(n);
        Vec b(n);
        for (std::size_t i = 0; i < n; ++i) {
            FElem prod = h[i];
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) prod = f.mul(prod, f.sub(a[i], a[j]));
            b[i] = f.inv(prod);
        }
        return certify(std::move(a), std::move(b));
    }

    // systematic form: generator (I | X) with X free of zeros for a genuine
    // generalized Reed-Solomon code (every systematic row has weight n-k+1)
    const Matrix& gen = c.gen();
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < k; ++j)
            if (gen.at(r, j) != (r == j ? 1 : 0)) return ss_fail("not in systematic form (not MDS)");
        for (std::size_t j = k; j < n; ++j)
            if (gen.at(r, j) == 0) return ss_fail("systematic part has zeros (not MDS)");
    }

    // Images of the points under the map p = K (a - a_2)/(a - a_1): infinity
    // at position 0, zero at position 1, the ratio of rows 0 and 1 elsewhere.
    // Positions 2..k-1 come from the pole of a fitted fractional-linear map.
    Vec p(n, 0);  // p[0] is the point at infinity, tracked by convention
    Vec ps(n - k);
    for (std::size_t j = k; j < n; ++j) {
        p[j] = f.div(gen.at(0, j), gen.at(1, j));
        ps[j - k] = p[j];
    }
    {
        Vec sorted = ps;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return ss_fail("point images collide");
    }
    for (std::size_t i = 2; i < k; ++i) {
        Vec taus(n - k);
        for (std::size_t j = k; j < n; ++j) taus[j - k] = f.div(gen.at(i, j), gen.at(1, j));
        const auto pole = fit_pole(field, ps, taus);
        if (!pole) return ss_fail("fractional-linear fit failed");
        p[i] = *pole;
    }
    {
        Vec affine(p.begin() + 1, p.end());
        std::sort(affine.begin(), affine.end());
        if (std::adjacent_find(affine.begin(), affine.end()) != affine.end())
            return ss_fail("recovered points collide");
    }

    // Final change of coordinates z -> 1/(uz + 1): moves infinity to 0 and
    // fixes p = 0 at 1; u chosen so no point maps through a pole.
    std::vector<bool> bad(f.q(), false);
    for (std::size_t j = 1; j < n; ++j)
        if (p[j] != 0) bad[f.neg(f.inv(p[j]))] = true;
    FElem u = 0;
    for (std::uint32_t cand = 1; cand < f.q(); ++cand)
        if (!bad[cand]) {
            u = FElem(cand);
            break;
        }
    if (u == 0) return ss_fail("no pole-free normalization");
    Vec a(n);
    a[0] = 0;
    for (std::size_t j = 1; j < n; ++j) a[j] = f.inv(f.add(f.mul(u, p[j]), 1));

    const auto b = recover_multipliers(c, a, k);
    if (!b) return ss_fail("multiplier recovery failed");
    return certify(std::move(a), *b);
}

std::optional<Vec> AttackerDecoder::decode_message(std::span<const FElem> ciphertext) const {
    const auto codeword = decoder_.decode(ciphertext);
    if (!codeword) return std::nullopt;
    return solver_.solve_message(*codeword);
}

GrsAttackOutcome grs_full_attack(const PublicKey& pk) {
    GrsAttackOutcome out;
    StageClock clock(out.times);
    const LinearCode c_pub = LinearCode::from_rows(pk.g_pub);
    const LinearCode square = schur_power(c_pub, 2);
    out.sq_dim = square.k();
    clock.lap("square");

    if (square.k() % 2 == 0 || square.is_full()) {
        out.stage = "k-inference";
        return out;
    }
    const std::size_t k = (square.k() + 1) / 2;

    const SsResult points = ss_recover(square, square.k());
    clock.lap("ss");
    if (!points.success) {
        out.stage = "ss";
        return out;
    }

    const auto b = recover_multipliers(c_pub, points.a, k);
    clock.lap("multiplier");
    if (!b) {
        out.stage = "multiplier";
        return out;
    }
    RecoveredGrs rec{points.a, *b, k, true};

    GrsSpec spec{pk.field, rec.a, rec.b, k};
    if (pk.t > max_error_capacity(CodeSpec{spec})) {
        out.stage = "ecp";
        out.recovered = std::move(rec);
        return out;
    }
    try {
        out.decoder.emplace(build_ecp_grs(spec, pk.t), pk.g_pub);
    } catch (const std::exception&) {
        out.stage = "ecp";
        out.recovered = std::move(rec);
        return out;
    }
    clock.lap("ecp");
    out.recovered = std::move(rec);
    out.stage = "done";
    out.success = true;
    return out;
}

HermitianAttackOutcome hermitian_full_attack(const PublicKey& pk, const HermitianSpec& oracle_spec,
                                             std::uint64_t seed) {
    HermitianAttackOutcome out;
    StageClock clock(out.times);
    const LinearCode c_pub = LinearCode::from_rows(pk.g_pub);
    const LinearCode target = hermitian_code(oracle_spec);

    RecoveryResult rec = attack_recover_code(c_pub);
    out.sq_dim = rec.sq_dim;
    clock.lap("closure");
    LinearCode recovered = rec.code;
    if (rec.closure_degenerate) {
        // fall back to shortenings, sweeping the size upward from the one the
        // known divisor degree dictates until the target is hit
        out.used_shortening = true;
        const std::size_t s0 =
            std::max<std::size_t>(1, shortening_size_for_degree(std::size_t(std::max(oracle_spec.m, 0)), c_pub.n()));
        for (std::size_t s = s0; s + 1 < c_pub.k(); ++s) {
            const ShorteningResult sres = attack_with_shortening(c_pub, s, 8, seed);
            if (!sres.all_degenerate && sres.code == target) {
                recovered = sres.code;
                break;
            }
        }
        clock.lap("shortening");
    }
    out.recovered_dim = recovered.k();
    if (recovered != target) {
        out.stage = "closure";
        return out;
    }

    if (pk.t > max_error_capacity(CodeSpec{oracle_spec})) {
        out.stage = "ecp";
        return out;
    }
    try {
        out.decoder.emplace(build_ecp_hermitian(oracle_spec, pk.t), pk.g_pub);
    } catch (const std::exception&) {
        out.stage = "ecp";
        return out;
    }
    clock.lap("ecp");
    out.stage = "done";
    out.success = true;
    return out;
}

}  // namespace mcsub
