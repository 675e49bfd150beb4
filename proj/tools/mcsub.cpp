// Command-line frontend: key lifecycle, attacks, experiments, verification.
// Every randomized command takes an explicit --seed; identical invocations
// produce byte-identical files.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mcsub/attack.hpp"
#include "mcsub/experiments.hpp"
#include "mcsub/io.hpp"
#include "mcsub/rng.hpp"

using namespace mcsub;

namespace {

struct KeygenOptions {
    std::string family;
    unsigned q0 = 0;
    int m = 0;
    std::uint32_t q = 0;
    std::size_t n = 0, k = 0, l = 0;
    std::uint64_t seed = 0;
    std::string pub_path, sec_path;
    unsigned t_override = 0;
    bool has_t_override = false;
    bool force = false;
    bool permute = false;
};

CodeSpec build_spec(const KeygenOptions& opt) {
    if (opt.family == "hermitian") {
        if (opt.q0 == 9 && !opt.force)
            throw std::runtime_error(
                "q0=9 parameters are inconsistent in their published form (no divisor degree matches the listed "
                "error capacity); pass --force to proceed with the derived capacity");
        return make_hermitian_spec(opt.q0, opt.m);
    }
    if (opt.family == "grs") {
        auto field = make_field_of_order(opt.q);
        return random_grs_spec(field, opt.n, opt.k, opt.seed);
    }
    throw std::runtime_error("unknown family: " + opt.family);
}

std::string render_public_key(const PublicKey& pk) {
    std::ostringstream out;
    write_public_key(out, pk);
    return out.str();
}

std::string render_secret_key(const SecretKey& sk) {
    std::ostringstream out;
    write_secret_key(out, sk);
    return out.str();
}

PublicKey load_public_key(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_public_key(in);
}

SecretKey load_secret_key(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_secret_key(in);
}

Vec parse_message(const std::string& text, const Field& f, std::size_t expected) {
    std::istringstream iss(text);
    Vec msg;
    std::uint64_t v = 0;
    while (iss >> v) {
        if (v >= f.q()) throw std::runtime_error("message symbol out of range");
        msg.push_back(FElem(v));
    }
    if (msg.size() != expected)
        throw std::runtime_error("message needs exactly " + std::to_string(expected) + " symbols");
    return msg;
}

long run_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

int cmd_keygen(const KeygenOptions& opt) {
    const CodeSpec spec = build_spec(opt);
    const auto kp = keygen(spec, opt.l, opt.seed,
                           opt.has_t_override ? std::optional<unsigned>(opt.t_override) : std::nullopt, opt.permute);
    if (kp.resistant_by_pair_bound)
        std::cerr << "warning: subcode dimension below the square bound (" << kp.pair_bound << " < " << kp.square_dim
                  << "); key flagged attack-resistant by the pair constraint\n";
    save_file(opt.pub_path, render_public_key(kp.pub));
    save_file(opt.sec_path, render_secret_key(kp.sec));
    std::cout << "wrote " << opt.pub_path << " (n=" << kp.pub.n() << " l=" << kp.pub.l() << " t=" << kp.pub.t
              << ") and " << opt.sec_path << "\n";
    return 0;
}

int cmd_encrypt(const std::string& pub_path, const std::string& out_path, const std::string& msg_text,
                const std::string& msg_out, std::uint64_t seed, long weight_override) {
    const PublicKey pk = load_public_key(pub_path);
    Vec msg;
    if (!msg_text.empty()) {
        msg = parse_message(msg_text, *pk.field, pk.l());
    } else {
        Rng rng(trial_seed(seed, 0x6d7367));  // separate stream from the error draw
        msg.resize(pk.l());
        for (auto& x : msg) x = FElem(rng.below(pk.field->q()));
    }
    const Vec y = weight_override < 0 ? encrypt(pk, msg, seed)
                                      : encrypt_with_weight(pk, msg, std::size_t(weight_override), seed);
    std::ostringstream out;
    write_ciphertext(out, *pk.field, y);
    save_file(out_path, out.str());
    if (!msg_out.empty()) {
        std::ostringstream m;
        for (std::size_t i = 0; i < msg.size(); ++i) m << (i ? " " : "") << msg[i];
        m << "\n";
        save_file(msg_out, m.str());
    }
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_decrypt(const std::string& sec_path, const std::string& in_path, const std::string& out_path) {
    const SecretKey sk = load_secret_key(sec_path);
    std::ifstream in(in_path);
    if (!in) throw std::runtime_error("cannot open: " + in_path);
    const auto [field, y] = read_ciphertext(in);
    if (!(*field == *spec_field(sk.spec))) throw std::runtime_error("ciphertext field does not match the key");
    const auto msg = decrypt(sk, y);
    if (!msg) {
        std::cerr << "decode failure\n";
        return 1;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < msg->size(); ++i) out << (i ? " " : "") << (*msg)[i];
    out << "\n";
    save_file(out_path, out.str());
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

struct AttackOptions {
    std::string pub_path, sec_path, out_path, report_path;
    std::string mode;  // closure | grs | hermitian
    std::uint64_t seed = 0;
    std::size_t shorten_size = 0;
    std::size_t shorten_trials = 0;
    std::size_t ciphertexts = 5;
    bool strict = false;
};

int cmd_attack(const AttackOptions& opt) {
    const PublicKey pk = load_public_key(opt.pub_path);
    const auto start = std::chrono::steady_clock::now();
    TrialRow row;
    row.seed = opt.seed;
    row.l = long(pk.l());
    LinearCode recovered = LinearCode::zero(pk.field, pk.n());
    bool success = false;

    if (opt.mode == "closure") {
        row.family = "blind";
        row.q0_or_n = long(pk.n());
        row.m_or_k = -1;  // unknown to a blind attacker
        const LinearCode c_pub = LinearCode::from_rows(pk.g_pub);
        RecoveryResult rec = attack_recover_code(c_pub);
        row.sq_dim = long(rec.sq_dim);
        recovered = rec.code;
        if (rec.closure_degenerate && opt.shorten_trials > 0) {
            // blind fallback: sweep the shortening size upward
            std::size_t s = opt.shorten_size ? opt.shorten_size : 1;
            for (; s < pk.l(); ++s) {
                auto sres = attack_with_shortening(c_pub, s, opt.shorten_trials, opt.seed);
                if (!sres.all_degenerate) {
                    recovered = sres.code;
                    rec.closure_degenerate = false;
                    break;
                }
            }
        }
        if (rec.closure_degenerate) {
            row.stage_reached = "closure-degenerate";
        } else if (recovered == c_pub) {
            row.stage_reached = "closure-identity";
        } else {
            row.stage_reached = "closure-grew";
            success = true;  // blind semantics: the closure found a larger code
        }
        if (!opt.sec_path.empty()) {
            const SecretKey sk = load_secret_key(opt.sec_path);
            success = recovered == enclosing_code(sk.spec);
            row.stage_reached += success ? "-verified" : "-mismatch";
        }
    } else if (opt.mode == "grs") {
        row.family = "grs";
        row.q0_or_n = long(pk.n());
        const GrsAttackOutcome outcome = grs_full_attack(pk);
        row.sq_dim = long(outcome.sq_dim);
        row.m_or_k = outcome.recovered ? long(outcome.recovered->k) : -1;
        row.stage_reached = outcome.stage;
        success = outcome.success;
        if (success) {
            recovered = grs_code(GrsSpec{pk.field, outcome.recovered->a, outcome.recovered->b, outcome.recovered->k});
            for (std::size_t i = 0; i < opt.ciphertexts && success; ++i) {
                Rng rng(trial_seed(opt.seed, 0xc0de + i));
                Vec msg(pk.l());
                for (auto& x : msg) x = FElem(rng.below(pk.field->q()));
                const Vec y = encrypt(pk, msg, trial_seed(opt.seed, 0xe00 + i));
                const auto back = outcome.decoder->decode_message(y);
                success = back.has_value() && *back == msg;
            }
            if (!success) row.stage_reached = "decrypt";
        }
        for (const auto& [stage, ms] : outcome.times) std::cerr << "stage " << stage << ": " << ms << " ms\n";
    } else if (opt.mode == "hermitian") {
        if (opt.sec_path.empty()) throw std::runtime_error("--mode hermitian needs --sec for the divisor degree");
        const SecretKey sk = load_secret_key(opt.sec_path);
        const auto* hspec = std::get_if<HermitianSpec>(&sk.spec);
        if (!hspec) throw std::runtime_error("secret key is not hermitian");
        row.family = "hermitian";
        row.q0_or_n = long(hspec->q0);
        row.m_or_k = hspec->m;
        const HermitianAttackOutcome outcome = hermitian_full_attack(pk, *hspec, opt.seed);
        row.sq_dim = long(outcome.sq_dim);
        row.stage_reached = outcome.stage;
        success = outcome.success;
        if (success) {
            recovered = hermitian_code(*hspec);
            for (std::size_t i = 0; i < opt.ciphertexts && success; ++i) {
                Rng rng(trial_seed(opt.seed, 0xc0de + i));
                Vec msg(pk.l());
                for (auto& x : msg) x = FElem(rng.below(pk.field->q()));
                const Vec y = encrypt(pk, msg, trial_seed(opt.seed, 0xe00 + i));
                const auto back = outcome.decoder->decode_message(y);
                success = back.has_value() && *back == msg;
            }
            if (!success) row.stage_reached = "decrypt";
        }
        for (const auto& [stage, ms] : outcome.times) std::cerr << "stage " << stage << ": " << ms << " ms\n";
    } else {
        throw std::runtime_error("unknown mode: " + opt.mode);
    }

    row.success = success ? 1 : 0;
    row.elapsed_ms = run_ms(start);
    if (!opt.out_path.empty()) {
        std::ostringstream out;
        write_code(out, recovered);
        save_file(opt.out_path, out.str());
    }
    if (!opt.report_path.empty()) save_file(opt.report_path, csv_header() + csv_line(row));
    std::cout << csv_header() << csv_line(row);
    return (opt.strict && !success) ? 1 : 0;
}

struct ExperimentOptions {
    std::string kind;  // square-fill | subfield | random-closure
    std::string family = "hermitian";
    unsigned q0 = 0;
    int m = 0;
    std::uint32_t q = 0;
    std::size_t n = 0, k = 0, l = 0;
    std::uint32_t subfield = 0;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string out_path;
    bool strict = false;
};

int cmd_experiment(const ExperimentOptions& opt) {
    std::vector<TrialRow> rows;
    bool all_ok = true;
    if (opt.kind == "square-fill") {
        CodeSpec spec = opt.family == "hermitian"
                            ? CodeSpec{make_hermitian_spec(opt.q0, opt.m)}
                            : CodeSpec{random_grs_spec(make_field_of_order(opt.q), opt.n, opt.k, opt.seed)};
        const auto res = square_fill_experiment(spec, opt.l, opt.trials, opt.seed, opt.jobs);
        rows = res.rows;
        all_ok = res.successes == res.trials;
        std::cerr << "frequency " << res.frequency << " over " << res.trials << " trials; pair bound "
                  << res.pair_bound << " vs dim C(2E) " << res.dim_c2e << "; thresholds 2k+1-g=" << res.threshold_low
                  << " 2k-1+g=" << res.threshold_high << "\n";
    } else if (opt.kind == "subfield") {
        for (std::size_t i = 0; i < opt.trials; ++i) {
            const std::uint64_t s = trial_seed(opt.seed, i);
            GrsSpec spec = random_grs_spec(make_field_of_order(opt.q), opt.n, opt.k, s);
            const auto rep = subfield_resistance_experiment(spec, opt.subfield, s);
            rows.push_back(rep.row);
            all_ok = all_ok && rep.resistant;
        }
    } else if (opt.kind == "random-closure") {
        const auto res = random_closure_control(make_field_of_order(opt.q), opt.n, opt.l, opt.trials, opt.seed);
        rows = res.rows;
        all_ok = res.closed == res.trials;
        std::cerr << "closure-identity frequency " << res.frequency << " over " << res.trials << " trials\n";
    } else {
        throw std::runtime_error("unknown experiment kind: " + opt.kind);
    }
    const std::string csv = to_csv(rows);
    if (!opt.out_path.empty()) save_file(opt.out_path, csv);
    std::cout << csv;
    return (opt.strict && !all_ok) ? 1 : 0;
}

int cmd_verify(bool slow, bool mutate) {
    std::vector<unsigned> q0s{2, 3};
    if (slow) q0s.push_back(4);
    bool all_pass = true;
    bool mutated_once = false;
    for (unsigned q0 : q0s) {
        const int n = int(q0) * int(q0) * int(q0);
        const int g = int(q0) * (int(q0) - 1) / 2;
        for (int m = 2 * g + 1; 2 * m <= n + 2 * g - 2; ++m) {
            auto spec = make_hermitian_spec(q0, m);
            LinearCode code = hermitian_code(spec);
            if (mutate && !mutated_once) {
                // negative control: flip one generator entry
                Matrix gen = code.gen();
                gen.at(0, code.n() - 1) = FElem(gen.at(0, code.n() - 1) == 0 ? 1 : 0);
                code = LinearCode::from_rows(gen);
                mutated_once = true;
            }
            const bool sq_ok = schur_power(code, 2) == hermitian_code(make_hermitian_spec(q0, 2 * m));
            std::cout << "square q0=" << q0 << " m=" << m << (sq_ok ? " PASS" : " FAIL") << "\n";
            all_pass = all_pass && sq_ok;
            if (2 * m <= n - 2) {
                const bool cl_ok = closure(code, 2, ClosureMode::kCrossValidate) == code;
                std::cout << "closure q0=" << q0 << " m=" << m << (cl_ok ? " PASS" : " FAIL") << "\n";
                all_pass = all_pass && cl_ok;
            }
        }
    }
    std::cout << (all_pass ? "verification PASS" : "verification FAIL") << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for subcode-based McEliece keys over evaluation codes and their closure attack"};
    app.require_subcommand(1);

    KeygenOptions kg;
    auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
    keygen_cmd->add_option("--family", kg.family, "grs or hermitian")->required();
    keygen_cmd->add_option("--q0", kg.q0, "hermitian curve parameter (field is GF(q0^2))");
    keygen_cmd->add_option("--m", kg.m, "hermitian divisor degree");
    keygen_cmd->add_option("--q", kg.q, "grs field order");
    keygen_cmd->add_option("--n", kg.n, "grs length");
    keygen_cmd->add_option("--k", kg.k, "grs dimension");
    keygen_cmd->add_option("--l", kg.l, "public subcode dimension")->required();
    keygen_cmd->add_option("--seed", kg.seed, "64-bit seed")->required();
    keygen_cmd->add_option("--pub", kg.pub_path, "public key output path")->required();
    keygen_cmd->add_option("--sec", kg.sec_path, "secret key output path")->required();
    auto* tover = keygen_cmd->add_option("--t-override", kg.t_override, "override the published error capacity");
    keygen_cmd->add_flag("--force", kg.force, "allow parameter sets with documented inconsistencies");
    keygen_cmd->add_flag("--permute", kg.permute, "additionally permute the public columns (off by default)");

    std::string enc_pub, enc_out, enc_msg, enc_msg_out;
    std::uint64_t enc_seed = 0;
    long enc_weight = -1;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a message under a public key");
    encrypt_cmd->add_option("--pub", enc_pub)->required();
    encrypt_cmd->add_option("--out", enc_out, "ciphertext output path")->required();
    encrypt_cmd->add_option("--seed", enc_seed)->required();
    encrypt_cmd->add_option("--msg", enc_msg, "message symbols, space separated (default: drawn from the seed)");
    encrypt_cmd->add_option("--msg-out", enc_msg_out, "write the encrypted message here");
    encrypt_cmd->add_option("--weight", enc_weight, "error weight override (default: the key's t)");

    std::string dec_sec, dec_in, dec_out;
    auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a ciphertext with a secret key");
    decrypt_cmd->add_option("--sec", dec_sec)->required();
    decrypt_cmd->add_option("--in", dec_in)->required();
    decrypt_cmd->add_option("--out", dec_out)->required();

    AttackOptions at;
    auto* attack_cmd = app.add_subcommand("attack", "run an attack against a public key");
    attack_cmd->add_option("--pub", at.pub_path)->required();
    attack_cmd->add_option("--mode", at.mode, "closure, grs, or hermitian")->required();
    attack_cmd->add_option("--sec", at.sec_path, "secret key (oracle for hermitian mode, verification otherwise)");
    attack_cmd->add_option("--out", at.out_path, "recovered code output path");
    attack_cmd->add_option("--report", at.report_path, "CSV report path");
    attack_cmd->add_option("--seed", at.seed);
    attack_cmd->add_option("--shorten-size", at.shorten_size, "shortening size for the fallback (0 = sweep)");
    attack_cmd->add_option("--shorten-trials", at.shorten_trials, "shortening trials (0 = no fallback)");
    attack_cmd->add_option("--ciphertexts", at.ciphertexts, "seeded ciphertexts to check after key recovery");
    attack_cmd->add_flag("--strict", at.strict, "nonzero exit when the attack fails");

    ExperimentOptions ex;
    auto* exp_cmd = app.add_subcommand("experiment", "seeded batch experiments with CSV output");
    exp_cmd->add_option("--kind", ex.kind, "square-fill, subfield, or random-closure")->required();
    exp_cmd->add_option("--family", ex.family, "square-fill family: hermitian or grs");
    exp_cmd->add_option("--q0", ex.q0);
    exp_cmd->add_option("--m", ex.m);
    exp_cmd->add_option("--q", ex.q);
    exp_cmd->add_option("--n", ex.n);
    exp_cmd->add_option("--k", ex.k);
    exp_cmd->add_option("--l", ex.l);
    exp_cmd->add_option("--subfield", ex.subfield, "subfield order for the subfield kind");
    exp_cmd->add_option("--trials", ex.trials)->required()->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", ex.seed)->required();
    exp_cmd->add_option("--jobs", ex.jobs, "parallel trial workers (rows stay in trial order)");
    exp_cmd->add_option("--out", ex.out_path, "CSV output path");
    exp_cmd->add_flag("--strict", ex.strict, "nonzero exit when any trial fails");

    bool slow = false, mutate = false;
    auto* verify_cmd = app.add_subcommand("verify", "check the square and closure identities per divisor degree");
    verify_cmd->add_flag("--slow", slow, "include q0=4");
    verify_cmd->add_flag("--mutate", mutate, "corrupt one code as a negative control");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*keygen_cmd) {
            kg.has_t_override = tover->count() > 0;
            return cmd_keygen(kg);
        }
        if (*encrypt_cmd) return cmd_encrypt(enc_pub, enc_out, enc_msg, enc_msg_out, enc_seed, enc_weight);
        if (*decrypt_cmd) return cmd_decrypt(dec_sec, dec_in, dec_out);
        if (*attack_cmd) return cmd_attack(at);
        if (*exp_cmd) return cmd_experiment(ex);
        if (*verify_cmd) return cmd_verify(slow, mutate);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
