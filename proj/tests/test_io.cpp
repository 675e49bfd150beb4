#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mcsub/io.hpp"
#include "mcsub/report.hpp"

using namespace mcsub;

namespace {

template <typename T, typename W, typename R>
void roundtrip_equal(const T& value, W write, R read) {
    std::ostringstream out;
    write(out, value);
    std::istringstream in(out.str());
    const T back = read(in);
    std::ostringstream out2;
    write(out2, back);
    CHECK(out.str() == out2.str());
}

}  // namespace

TEST_CASE("field line format") {
    Field f(7, 2);
    CHECK(format_field(f) == "GF 7 2 1 0 1");
    CHECK(format_field(Field(2, 1)) == "GF 2 1 0 1");
}

TEST_CASE("code file roundtrip") {
    auto c = random_code(make_field(2, 2), 10, 4, 5);
    roundtrip_equal(
        c, [](std::ostream& o, const LinearCode& x) { write_code(o, x); },
        [](std::istream& i) { return read_code(i); });
}

TEST_CASE("public and secret key roundtrip, grs and hermitian") {
    GrsSpec gspec = random_grs_spec(make_field(61, 1), 20, 8, 3);
    auto gkp = keygen(CodeSpec{gspec}, 4, 3);
    roundtrip_equal(
        gkp.pub, [](std::ostream& o, const PublicKey& x) { write_public_key(o, x); },
        [](std::istream& i) { return read_public_key(i); });
    roundtrip_equal(
        gkp.sec, [](std::ostream& o, const SecretKey& x) { write_secret_key(o, x); },
        [](std::istream& i) { return read_secret_key(i); });

    auto hspec = make_hermitian_spec(2, 3);
    auto hkp = keygen(CodeSpec{hspec}, 2, 7);
    roundtrip_equal(
        hkp.sec, [](std::ostream& o, const SecretKey& x) { write_secret_key(o, x); },
        [](std::istream& i) { return read_secret_key(i); });

    // parsed secret key still decrypts
    std::ostringstream out;
    write_secret_key(out, hkp.sec);
    std::istringstream in(out.str());
    SecretKey back = read_secret_key(in);
    Vec msg{2, 3};
    Vec y = encrypt(hkp.pub, msg, 5);
    auto dec = decrypt(back, y);
    REQUIRE(dec.has_value());
    CHECK(*dec == msg);
}

TEST_CASE("permuted secret key roundtrips through the file format") {
    GrsSpec spec = random_grs_spec(make_field(61, 1), 20, 8, 9);
    auto kp = keygen(CodeSpec{spec}, 4, 9, std::nullopt, true);
    roundtrip_equal(
        kp.sec, [](std::ostream& o, const SecretKey& x) { write_secret_key(o, x); },
        [](std::istream& i) { return read_secret_key(i); });
    std::ostringstream out;
    write_secret_key(out, kp.sec);
    CHECK(out.str().find("PERM ") != std::string::npos);
    std::istringstream in(out.str());
    SecretKey back = read_secret_key(in);
    CHECK(back.permutation == kp.sec.permutation);
    Vec msg{1, 2, 3, 4};
    Vec y = encrypt(kp.pub, msg, 3);
    auto dec = decrypt(back, y);
    REQUIRE(dec.has_value());
    CHECK(*dec == msg);
}

TEST_CASE("ciphertext roundtrip") {
    auto f = make_field(2, 2);
    Vec y{0, 1, 2, 3, 1};
    std::ostringstream out;
    write_ciphertext(out, *f, y);
    std::istringstream in(out.str());
    auto [field, back] = read_ciphertext(in);
    CHECK(*field == *f);
    CHECK(back == y);
}

TEST_CASE("malformed files name the offending line") {
    SUBCASE("bad magic") {
        std::istringstream in("MCSUB-PUB v2\n");
        try {
            read_public_key(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("element out of range") {
        std::istringstream in("GF 2 1 0 1\nCODE 3 1\n1 3\n1 7 0\n");
        try {
            read_code(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
        }
    }
    SUBCASE("wrong row width") {
        std::istringstream in("GF 2 1 0 1\nCODE 3 1\n1 3\n1 0\n");
        CHECK_THROWS_AS(read_code(in), ParseError);
    }
    SUBCASE("reducible modulus rejected") {
        std::istringstream in("GF 2 2 0 0 1\nCODE 2 1\n1 2\n1 0\n");
        CHECK_THROWS_AS(read_code(in), ParseError);
    }
    SUBCASE("truncated matrix") {
        std::istringstream in("GF 2 1 0 1\nCODE 3 2\n2 3\n1 0 1\n");
        CHECK_THROWS_AS(read_code(in), ParseError);
    }
}

TEST_CASE("csv schema") {
    TrialRow row{7, "hermitian", 7, 170, 50, "done", 1, 320, 1234};
    CHECK(csv_header() == "seed,family,q0_or_n,m_or_k,l,stage_reached,success,sq_dim,elapsed_ms\n");
    CHECK(csv_line(row) == "7,hermitian,7,170,50,done,1,320,1234\n");
    CHECK(to_csv_without_timing({row}).find(",0\n") != std::string::npos);
}
