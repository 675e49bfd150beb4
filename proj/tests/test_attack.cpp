#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcsub/attack.hpp"
#include "mcsub/experiments.hpp"
#include "mcsub/rng.hpp"

using namespace mcsub;

TEST_CASE("distinguisher basics") {
    auto f16 = make_field(2, 4);
    SUBCASE("full space is random-like") {
        auto rep = distinguish(LinearCode::full(f16, 6));
        CHECK(rep.sq_dim == 6);
        CHECK(rep.random_expectation == 6);
        CHECK_FALSE(rep.algebraic_like);
    }
    SUBCASE("random codes are random-like, structured subcodes are not") {
        auto c = random_code(f16, 24, 6, 5);
        auto rep = distinguish(c);
        CHECK(rep.random_expectation == 21);
        CHECK(rep.sq_dim == 21);
        CHECK_FALSE(rep.algebraic_like);

        auto spec = make_hermitian_spec(3, 10);  // [27, 8]
        auto sub = random_subcode(hermitian_code(spec), 6, 3);
        auto srep = distinguish(sub);
        CHECK(srep.sq_dim == 18);  // dim C(20 P_inf) = 20 + 1 - 3
        CHECK(srep.algebraic_like);
    }
    SUBCASE("sq_dim nondecreasing along a chain of subcodes") {
        auto spec = make_hermitian_spec(3, 9);
        auto enclosing = hermitian_code(spec);
        Rng rng(8);
        Matrix rows(enclosing.field_ptr(), 0, 27);
        LinearCode prev = LinearCode::zero(enclosing.field_ptr(), 27);
        std::size_t last = 0;
        for (std::size_t l = 1; l <= enclosing.k(); ++l) {
            LinearCode cur = prev;
            while (cur.k() < l) {
                Vec msg(enclosing.k());
                for (auto& x : msg) x = FElem(rng.below(9));
                cur = sum_codes(cur, LinearCode::from_rows(
                                         Matrix::from_rows(enclosing.field_ptr(), {enclosing.gen().mul_left(msg)})));
            }
            auto rep = distinguish(cur);
            CHECK(rep.sq_dim >= last);
            last = rep.sq_dim;
            prev = cur;
        }
    }
}

TEST_CASE("closure recovery") {
    SUBCASE("enclosing code is its own recovery (closure identity)") {
        auto c = hermitian_code(make_hermitian_spec(2, 3));
        auto rec = attack_recover_code(c);
        CHECK_FALSE(rec.closure_degenerate);
        CHECK(rec.code == c);
    }
    SUBCASE("random public codes recover to themselves") {
        auto f16 = make_field(2, 4);
        std::size_t identity = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto c = random_code(f16, 20, 5, trial_seed(40, seed));
            auto rec = attack_recover_code(c);
            CHECK(rec.code.contains(c));
            if (rec.code == c) ++identity;
        }
        CHECK(identity >= 19);
    }
    SUBCASE("degenerate square is flagged") {
        auto f5 = make_field(5, 1);
        auto rec_full = attack_recover_code(LinearCode::full(f5, 4));
        CHECK(rec_full.closure_degenerate);
        CHECK(rec_full.code == LinearCode::full(f5, 4));

        // subcode of a GRS beyond the closure bound: the square saturates
        auto f23 = make_field(23, 1);
        auto sub = random_subcode(grs_code(random_grs_spec(f23, 20, 12, 5)), 9, 6);
        auto rec = attack_recover_code(sub);
        CHECK(rec.closure_degenerate);
        CHECK(rec.code == LinearCode::full(f23, 20));
    }
    SUBCASE("structured subcode recovers the enclosing code") {
        auto spec = make_hermitian_spec(3, 8);  // k=6, dim C(2E)=14, needs l >= 5
        auto enclosing = hermitian_code(spec);
        auto sub = random_subcode(enclosing, 5, 17);
        auto rec = attack_recover_code(sub);
        CHECK(rec.code == enclosing);
    }
}

TEST_CASE("shortening attack") {
    auto f23 = make_field(23, 1);
    SUBCASE("s=0, one trial, equals plain recovery") {
        auto c = random_code(f23, 10, 3, 3);
        auto plain = attack_recover_code(c);
        auto viashort = attack_with_shortening(c, 0, 1, 0);
        CHECK(viashort.code == plain.code);
    }
    SUBCASE("degree beyond the closure bound, recovered through shortenings") {
        auto f31 = make_field(31, 1);
        GrsSpec spec = random_grs_spec(f31, 30, 17, 5);  // deg E = 16 > (30-2)/2
        auto enclosing = grs_code(spec);
        auto sub = random_subcode(enclosing, 12, 105);
        CHECK(attack_recover_code(sub).closure_degenerate);
        CHECK(shortening_size_for_degree(16, 30) == 4);
        auto rec = attack_with_shortening(sub, 5, 8, 123);
        CHECK_FALSE(rec.all_degenerate);
        CHECK(rec.code == enclosing);
    }
    SUBCASE("sum is monotone in trials") {
        auto f31 = make_field(31, 1);
        GrsSpec spec = random_grs_spec(f31, 30, 17, 5);
        auto sub = random_subcode(grs_code(spec), 12, 105);
        LinearCode prev = LinearCode::zero(f31, 30);
        for (std::size_t trials = 1; trials <= 4; ++trials) {
            auto rec = attack_with_shortening(sub, 5, trials, 123);
            CHECK(rec.code.contains(prev));
            prev = rec.code;
        }
    }
    SUBCASE("all shortenings degenerate is flagged") {
        auto c = random_code(f23, 8, 5, 2);  // squares fill the space even shortened
        auto rec = attack_with_shortening(c, 1, 4, 9);
        CHECK(rec.all_degenerate);
    }
}

TEST_CASE("sidelnikov-shestakov recovery") {
    auto f5 = make_field(5, 1);
    SUBCASE("small known instance") {
        GrsSpec spec{f5, {0, 1, 2, 3}, {1, 1, 1, 1}, 2};
        auto c = grs_code(spec);
        auto res = ss_recover(c, 2);
        REQUIRE(res.success);
        CHECK(res.a[0] == 0);
        CHECK(res.a[1] == 1);
        CHECK(grs_code(GrsSpec{f5, res.a, res.b, 2}) == c);
    }
    SUBCASE("k = 1") {
        GrsSpec spec{f5, {0, 2, 3}, {2, 3, 4}, 1};
        auto res = ss_recover(grs_code(spec), 1);
        REQUIRE(res.success);
    }
    SUBCASE("k = n-1; the full space is not representable") {
        GrsSpec spec = random_grs_spec(f5, 5, 4, 2);
        auto res = ss_recover(grs_code(spec), 4);
        REQUIRE(res.success);
        CHECK_FALSE(ss_recover(LinearCode::full(f5, 5), 5).success);
    }
    SUBCASE("random non-grs code fails") {
        auto f11 = make_field(11, 1);
        std::size_t failed = 0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto c = random_code(f11, 8, 3, trial_seed(90, seed));
            auto res = ss_recover(c, 3);
            if (!res.success) ++failed;
        }
        CHECK(failed == 10);
    }
    SUBCASE("sweep of random instances over several fields") {
        for (std::uint32_t q : {11u, 16u, 61u}) {
            auto f = make_field_of_order(q);
            for (std::size_t k = 2; k <= 6; k += 2) {
                GrsSpec spec = random_grs_spec(f, q - 1, k, q + k);
                auto c = grs_code(spec);
                auto res = ss_recover(c, k);
                REQUIRE(res.success);
                CHECK(grs_code(GrsSpec{f, res.a, res.b, k}) == c);
            }
        }
    }
}

TEST_CASE("multiplier recovery") {
    auto f61 = make_field(61, 1);
    GrsSpec spec = random_grs_spec(f61, 30, 8, 15);
    auto c = grs_code(spec);
    SUBCASE("whole code") {
        auto b = recover_multipliers(c, spec.a, 8);
        REQUIRE(b.has_value());
        CHECK(grs_code(GrsSpec{f61, spec.a, *b, 8}) == c);
    }
    SUBCASE("subcode containment certified") {
        auto sub = random_subcode(c, 4, 9);
        auto b = recover_multipliers(sub, spec.a, 8);
        REQUIRE(b.has_value());
        CHECK(grs_code(GrsSpec{f61, spec.a, *b, 8}).contains(sub));
    }
    SUBCASE("wrong points give nothing") {
        Vec wrong = spec.a;
        wrong[3] = FElem(wrong[3] == 60 ? 0 : wrong[3] + 1);
        // keep the points distinct
        while (std::count(wrong.begin(), wrong.end(), wrong[3]) > 1) wrong[3] = FElem((wrong[3] + 1) % 61);
        CHECK_FALSE(recover_multipliers(c, wrong, 8).has_value());
    }
}

TEST_CASE("grs full attack") {
    auto f61 = make_field(61, 1);
    SUBCASE("end to end with ciphertext recovery") {
        GrsSpec spec = random_grs_spec(f61, 60, 20, 31);
        auto kp = keygen(CodeSpec{spec}, 10, 31);
        auto outcome = grs_full_attack(kp.pub);
        REQUIRE(outcome.success);
        CHECK(outcome.sq_dim == 39);
        REQUIRE(outcome.recovered.has_value());
        CHECK(outcome.recovered->k == 20);
        CHECK(outcome.recovered->certified);
        Rng rng(1);
        for (int trial = 0; trial < 100; ++trial) {
            Vec msg(10);
            for (auto& x : msg) x = FElem(rng.below(61));
            Vec y = encrypt(kp.pub, msg, trial_seed(700, std::uint64_t(trial)));
            auto recovered_msg = outcome.decoder->decode_message(y);
            REQUIRE(recovered_msg.has_value());
            CHECK(*recovered_msg == msg);
        }
    }
    SUBCASE("l = k reduces to plain key recovery") {
        GrsSpec spec = random_grs_spec(f61, 40, 8, 5);
        auto kp = keygen(CodeSpec{spec}, 8, 5);
        auto outcome = grs_full_attack(kp.pub);
        REQUIRE(outcome.success);
        CHECK(outcome.recovered->k == 8);
    }
    SUBCASE("constraint violated: tiny l fails with a named stage") {
        GrsSpec spec = random_grs_spec(f61, 60, 20, 8);
        auto kp = keygen(CodeSpec{spec}, 3, 8);  // C(4,2) = 6 < 39
        auto outcome = grs_full_attack(kp.pub);
        CHECK_FALSE(outcome.success);
        CHECK((outcome.stage == "k-inference" || outcome.stage == "ss"));
        auto rep = distinguish(LinearCode::from_rows(kp.pub.g_pub));
        CHECK_FALSE(rep.algebraic_like);
    }
}

TEST_CASE("hermitian full attack") {
    SUBCASE("q0=2 m=3 with l=3 (whole code): exhaustive recovery") {
        auto spec = make_hermitian_spec(2, 3);
        auto kp = keygen(CodeSpec{spec}, 3, 11);
        auto outcome = hermitian_full_attack(kp.pub, spec);
        REQUIRE(outcome.success);
        const Field& f = *kp.pub.field;
        for (std::uint32_t w = 0; w < 64; ++w) {
            Vec msg{FElem(w % 4), FElem((w / 4) % 4), FElem(w / 16)};
            Vec clean = kp.pub.g_pub.mul_left(msg);
            for (std::size_t pos = 0; pos < 8; ++pos)
                for (std::uint32_t val = 1; val < 4; ++val) {
                    Vec y = clean;
                    y[pos] = f.add(y[pos], FElem(val));
                    auto out = outcome.decoder->decode_message(y);
                    REQUIRE(out.has_value());
                    CHECK(*out == msg);
                }
        }
    }
    SUBCASE("q0=3 m=8 l=5 subcode pipeline with seeded ciphertexts") {
        auto spec = make_hermitian_spec(3, 8);
        auto kp = keygen(CodeSpec{spec}, 5, 13);
        CHECK_FALSE(kp.resistant_by_pair_bound);  // C(6,2)=15 >= 14
        auto outcome = hermitian_full_attack(kp.pub, spec);
        REQUIRE(outcome.success);
        CHECK(outcome.recovered_dim == 6);
        Rng rng(2);
        for (int trial = 0; trial < 20; ++trial) {
            Vec msg(5);
            for (auto& x : msg) x = FElem(rng.below(9));
            Vec y = encrypt(kp.pub, msg, trial_seed(800, std::uint64_t(trial)));
            auto out = outcome.decoder->decode_message(y);
            REQUIRE(out.has_value());
            CHECK(*out == msg);
        }
    }
    SUBCASE("l below the pair bound: failure reported, not thrown") {
        auto spec = make_hermitian_spec(4, 20);
        auto kp = keygen(CodeSpec{spec}, 3, 17);
        CHECK(kp.resistant_by_pair_bound);  // C(4,2) = 6 < 35
        auto outcome = hermitian_full_attack(kp.pub, spec);
        CHECK_FALSE(outcome.success);
        CHECK(outcome.stage == "closure");
    }
}

TEST_CASE("square-fill experiment") {
    SUBCASE("hermitian q0=4 m=20 l=8 has high success frequency") {
        auto spec = make_hermitian_spec(4, 20);
        auto res = square_fill_experiment(CodeSpec{spec}, 8, 50, 3);
        CHECK(res.dim_c2e == 35);
        CHECK(res.pair_bound == 36);
        CHECK(res.pair_bound_meets_square);
        CHECK(res.threshold_low == 2 * 15 + 1 - 6);
        CHECK(res.threshold_high == 2 * 15 - 1 + 6);
        CHECK(res.frequency >= 0.9);
    }
    SUBCASE("l = k always squares onto C(2E)") {
        auto spec = make_hermitian_spec(3, 7);
        auto res = square_fill_experiment(CodeSpec{spec}, hermitian_code_dim(spec), 10, 1);
        CHECK(res.frequency == 1.0);
    }
    SUBCASE("l = 3 at the same spec: frequency near zero") {
        auto spec = make_hermitian_spec(4, 20);
        auto res = square_fill_experiment(CodeSpec{spec}, 3, 30, 5);
        CHECK(res.frequency <= 0.05);
    }
    SUBCASE("grs variant and determinism across jobs") {
        GrsSpec spec = random_grs_spec(make_field(61, 1), 60, 20, 77);
        auto a = square_fill_experiment(CodeSpec{spec}, 10, 16, 9, 1);
        auto b = square_fill_experiment(CodeSpec{spec}, 10, 16, 9, 3);
        CHECK(a.frequency >= 0.9);
        CHECK(to_csv_without_timing(a.rows) == to_csv_without_timing(b.rows));
    }
}

TEST_CASE("subfield resistance experiment") {
    auto f16 = make_field(2, 4);
    SUBCASE("GF(4) subcode of a GRS over GF(16) resists") {
        GrsSpec spec = random_grs_spec(f16, 15, 11, 21);
        auto rep = subfield_resistance_experiment(spec, 4, 21);
        CHECK_FALSE(rep.trivial_instance);
        CHECK(rep.subcode_dim >= 7);  // Delsarte bound n - 2(n-k)
        CHECK(rep.extended_dim == rep.subcode_dim);
        CHECK(rep.resistant);
    }
    SUBCASE("whole field reduces to attack success at closure-friendly degree") {
        GrsSpec spec = random_grs_spec(f16, 15, 5, 4);
        auto rep = subfield_resistance_experiment(spec, 16, 4);
        CHECK(rep.subcode_dim == 5);
        CHECK(rep.recovered_equals_enclosing);
        CHECK_FALSE(rep.resistant);
    }
    SUBCASE("GF(2) inside GF(16) at high rate reports as computed") {
        GrsSpec spec = random_grs_spec(f16, 15, 13, 33);
        auto rep = subfield_resistance_experiment(spec, 2, 33);
        if (!rep.trivial_instance) {
            CHECK(rep.subcode_dim > 0);
            CHECK(rep.resistant);
        }
    }
}

TEST_CASE("random closure control is deterministic") {
    auto f16 = make_field(2, 4);
    auto a = random_closure_control(f16, 20, 5, 20, 11);
    auto b = random_closure_control(f16, 20, 5, 20, 11);
    CHECK(a.frequency >= 0.9);
    CHECK(to_csv_without_timing(a.rows) == to_csv_without_timing(b.rows));
}
