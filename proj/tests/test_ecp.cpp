#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcsub/ecp.hpp"
#include "mcsub/rng.hpp"

using namespace mcsub;

namespace {

Vec random_codeword(const LinearCode& c, Rng& rng) {
    Vec msg(c.k());
    for (auto& x : msg) x = FElem(rng.below(c.field().q()));
    return c.gen().mul_left(msg);
}

Vec add_random_errors(const LinearCode& c, Vec word, std::size_t weight, Rng& rng) {
    const Field& f = c.field();
    std::vector<std::size_t> pos;
    while (pos.size() < weight) {
        std::size_t p = rng.below(c.n());
        if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
    }
    for (std::size_t p : pos) word[p] = f.add(word[p], FElem(1 + rng.below(f.q() - 1)));
    return word;
}

}  // namespace

TEST_CASE("grs pair validates and decodes a tiny instance") {
    auto f5 = make_field(5, 1);
    GrsSpec spec{f5, {0, 1, 2, 3}, {1, 1, 1, 1}, 2};
    auto pair = build_ecp_grs(spec, 1);
    CHECK(pair.a.k() == 2);
    CHECK(pair.b.k() == 1);
    CHECK(ecp_validate(pair).pass);

    auto c = grs_code(spec);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Vec cw = random_codeword(c, rng);
        Vec within = add_random_errors(c, cw, 1, rng);
        auto decoded = ecp_decode(pair, within);
        REQUIRE(decoded.has_value());
        CHECK(*decoded == cw);
    }
}

TEST_CASE("invalid hand-built pair fails with a named condition") {
    auto f5 = make_field(5, 1);
    GrsSpec spec{f5, {0, 1, 2, 3}, {1, 1, 1, 1}, 2};
    auto c = grs_code(spec);
    EcpPair bogus{dual(c), LinearCode::full(f5, 4), c, 4};
    auto cert = ecp_validate(bogus);
    CHECK_FALSE(cert.pass);
    CHECK_FALSE(cert.failed_condition.empty());
}

TEST_CASE("t = 0 degenerates to a membership check") {
    auto f5 = make_field(5, 1);
    GrsSpec spec{f5, {0, 1, 2, 3}, {1, 2, 1, 3}, 2};
    auto pair = build_ecp_grs(spec, 0);
    CHECK(pair.a.k() == 1);
    auto c = grs_code(spec);
    Rng rng(11);
    Vec cw = random_codeword(c, rng);
    auto decoded = ecp_decode(pair, cw);
    REQUIRE(decoded.has_value());
    CHECK(*decoded == cw);
    Vec off = add_random_errors(c, cw, 1, rng);
    CHECK_FALSE(ecp_decode(pair, off).has_value());
}

TEST_CASE("t above the radius is rejected at build time") {
    auto f5 = make_field(5, 1);
    GrsSpec spec{f5, {0, 1, 2, 3}, {1, 1, 1, 1}, 2};
    CHECK_THROWS(build_ecp_grs(spec, 2));
    CHECK_THROWS(build_ecp_hermitian(make_hermitian_spec(2, 3), 3));
}

TEST_CASE("hermitian pair q0=2 m=3 t=1: divisors and exhaustive decoding") {
    auto spec = make_hermitian_spec(2, 3);
    auto pair = build_ecp_hermitian(spec, 1);
    CHECK(pair.a == hermitian_code(make_hermitian_spec(2, 2)));
    CHECK(pair.b == hermitian_code(make_hermitian_spec(2, 3)));
    CHECK(pair.a.k() == 2);
    CHECK(pair.b.k() == 3);
    CHECK(pair.d_bperp_lb == 3);
    CHECK(ecp_validate(pair).pass);

    // every codeword decodes under every weight-1 error pattern
    auto c = hermitian_code(spec);
    const Field& f = c.field();
    EcpDecoder decoder(pair);
    std::size_t checked = 0;
    for (std::uint32_t w = 0; w < 64; ++w) {
        Vec msg{FElem(w % 4), FElem((w / 4) % 4), FElem(w / 16)};
        const Vec cw = c.gen().mul_left(msg);
        CHECK(decoder.decode(cw) == cw);  // zero errors
        for (std::size_t pos = 0; pos < 8; ++pos)
            for (std::uint32_t val = 1; val < 4; ++val) {
                Vec y = cw;
                y[pos] = f.add(y[pos], FElem(val));
                auto decoded = decoder.decode(y);
                REQUIRE(decoded.has_value());
                CHECK(*decoded == cw);
                ++checked;
            }
    }
    CHECK(checked == 64 * 24);
}

TEST_CASE("located vector vanishes on the true error support") {
    auto f13 = make_field(13, 1);
    GrsSpec spec = random_grs_spec(f13, 12, 4, 3);
    auto pair = build_ecp_grs(spec, 4);
    auto c = grs_code(spec);
    const Field& f = *f13;
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        Vec cw = random_codeword(c, rng);
        std::vector<std::size_t> pos;
        while (pos.size() < 4) {
            std::size_t p = rng.below(12);
            if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
        }
        Vec y = cw;
        for (std::size_t p : pos) y[p] = f.add(y[p], FElem(1 + rng.below(12)));
        auto decoded = ecp_decode(pair, y);
        REQUIRE(decoded.has_value());
        CHECK(*decoded == cw);
        // the difference y - decoded is supported exactly on the error set
        for (std::size_t p = 0; p < 12; ++p) {
            const bool is_err = std::find(pos.begin(), pos.end(), p) != pos.end();
            CHECK((f.sub(y[p], (*decoded)[p]) != 0) == is_err);
        }
    }
}

TEST_CASE("weight t+1 never silently corrupts weight <= t decoding") {
    auto f13 = make_field(13, 1);
    GrsSpec spec = random_grs_spec(f13, 12, 4, 7);
    auto pair = build_ecp_grs(spec, 4);
    auto c = grs_code(spec);
    Rng rng(77);
    std::size_t failures = 0, misdecodes = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Vec cw = random_codeword(c, rng);
        Vec y = add_random_errors(c, cw, 5, rng);  // t + 1
        auto decoded = ecp_decode(pair, y);
        if (!decoded)
            ++failures;
        else if (*decoded != cw) {
            ++misdecodes;
            CHECK(c.contains(*decoded));  // a codeword, just not ours
        }
    }
    CHECK(failures + misdecodes > 0);
}

TEST_CASE("larger grs instance: 100 seeded decode trials at full radius") {
    auto f61 = make_field(61, 1);
    GrsSpec spec = random_grs_spec(f61, 60, 20, 9);
    auto pair = build_ecp_grs(spec, 20);
    auto c = grs_code(spec);
    EcpDecoder decoder(pair);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(trial_seed(1000, seed));
        Vec cw = random_codeword(c, rng);
        Vec y = add_random_errors(c, cw, 20, rng);
        auto decoded = decoder.decode(y);
        REQUIRE(decoded.has_value());
        CHECK(*decoded == cw);
    }
}

TEST_CASE("hermitian q0=3 decoding at the design radius") {
    auto spec = make_hermitian_spec(3, 8);  // n=27, g=3, max t = (27-8-1-3)/2 = 7
    auto pair = build_ecp_hermitian(spec, 7);
    CHECK(ecp_validate(pair).pass);
    auto c = hermitian_code(spec);
    EcpDecoder decoder(pair);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(trial_seed(2000, seed));
        Vec cw = random_codeword(c, rng);
        Vec y = add_random_errors(c, cw, 7, rng);
        auto decoded = decoder.decode(y);
        REQUIRE(decoded.has_value());
        CHECK(*decoded == cw);
    }
}
