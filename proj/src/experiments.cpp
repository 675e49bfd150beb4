#include "mcsub/experiments.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "mcsub/rng.hpp"

namespace mcsub {

namespace {

long elapsed_ms_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

// Runs body(trial) for every trial index, optionally across threads; results
// land in trial order regardless of completion order.
void for_each_trial(std::size_t trials, unsigned jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || trials <= 1) {
        for (std::size_t i = 0; i < trials; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(jobs, unsigned(trials));
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= trials) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace

SquareFillResult square_fill_experiment(const CodeSpec& spec, std::size_t l, std::size_t trials, std::uint64_t seed,
                                        unsigned jobs) {
    const LinearCode enclosing = enclosing_code(spec);
    const std::size_t k = enclosing.k();

    CodeSpec doubled = spec;
    bool doubled_is_full = false;
    if (auto* g = std::get_if<GrsSpec>(&doubled)) {
        if (2 * g->k - 1 >= g->n()) {
            doubled_is_full = true;
        } else {
            Vec bb(g->b.size());
            g->field->row_hadamard(g->b, g->b, bb);
            g->b = std::move(bb);
            g->k = 2 * g->k - 1;
        }
    } else {
        std::get<HermitianSpec>(doubled).m *= 2;
    }
    const LinearCode square_target =
        doubled_is_full ? LinearCode::full(spec_field(spec), spec_length(spec)) : enclosing_code(doubled);

    SquareFillResult res;
    res.trials = trials;
    res.pair_bound = l * (l + 1) / 2;
    res.dim_c2e = square_target.k();
    const long genus = std::holds_alternative<HermitianSpec>(spec) ? long(std::get<HermitianSpec>(spec).genus()) : 0;
    res.threshold_low = 2 * long(k) + 1 - genus;
    res.threshold_high = 2 * long(k) - 1 + genus;
    res.pair_bound_meets_square = res.pair_bound >= res.dim_c2e;
    res.rows.resize(trials);

    const bool hermitian = std::holds_alternative<HermitianSpec>(spec);
    const long q0_or_n = hermitian ? long(std::get<HermitianSpec>(spec).q0) : long(spec_length(spec));
    const long m_or_k = hermitian ? long(std::get<HermitianSpec>(spec).m) : long(std::get<GrsSpec>(spec).k);

    std::atomic<std::size_t> successes{0};
    for_each_trial(trials, jobs, [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t s = trial_seed(seed, i);
        const LinearCode sub = random_subcode(enclosing, l, s);
        const LinearCode sq = schur_power(sub, 2);
        const bool ok = sq == square_target;
        if (ok) successes.fetch_add(1);
        res.rows[i] = TrialRow{s,
                               hermitian ? "hermitian" : "grs",
                               q0_or_n,
                               m_or_k,
                               long(l),
                               "square",
                               ok ? 1 : 0,
                               long(sq.k()),
                               elapsed_ms_since(start)};
    });
    res.successes = successes.load();
    res.frequency = trials ? double(res.successes) / double(trials) : 0.0;
    return res;
}

SubfieldReport subfield_resistance_experiment(const GrsSpec& spec, std::uint32_t subfield_order,
                                              std::uint64_t seed_label) {
    const auto start = std::chrono::steady_clock::now();
    const LinearCode enclosing = grs_code(spec);
    const SubfieldMap map = make_subfield_map(spec.field, subfield_order);

    SubfieldReport rep;
    const LinearCode sub_small = subfield_subcode(map, enclosing);
    rep.subcode_dim = sub_small.k();
    if (sub_small.is_zero()) {
        rep.trivial_instance = true;
        rep.resistant = true;
        rep.row = TrialRow{seed_label, "grs-subfield", long(spec.n()), long(spec.k), 0, "trivial", 1, 0,
                           elapsed_ms_since(start)};
        return rep;
    }
    const LinearCode extended = extend_scalars(map, sub_small);
    rep.extended_dim = extended.k();

    const RecoveryResult rec = attack_recover_code(extended);
    rep.sq_dim = rec.sq_dim;
    rep.closure_degenerate = rec.closure_degenerate;
    rep.recovered_dim = rec.code.k();
    rep.recovered_equals_enclosing = rec.code == enclosing;
    rep.recovered_proper_subcode = !rep.recovered_equals_enclosing && enclosing.contains(rec.code);
    rep.resistant = !rep.recovered_equals_enclosing;
    rep.row = TrialRow{seed_label,
                       "grs-subfield",
                       long(spec.n()),
                       long(spec.k),
                       long(rep.extended_dim),
                       rep.closure_degenerate ? "closure-degenerate" : "closure",
                       rep.resistant ? 1 : 0,
                       long(rep.sq_dim),
                       elapsed_ms_since(start)};
    return rep;
}

RandomClosureResult random_closure_control(FieldPtr field, std::size_t n, std::size_t l, std::size_t trials,
                                           std::uint64_t seed) {
    RandomClosureResult res;
    res.trials = trials;
    res.rows.resize(trials);
    std::size_t closed = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t s = trial_seed(seed, i);
        const LinearCode c = random_code(field, n, l, s);
        const RecoveryResult rec = attack_recover_code(c);
        const bool identity = rec.code == c;
        if (identity) ++closed;
        res.rows[i] = TrialRow{s,
                               "random",
                               long(n),
                               long(l),
                               long(l),
                               rec.closure_degenerate ? "closure-degenerate" : (identity ? "closure-identity" : "closure"),
                               identity ? 1 : 0,
                               long(rec.sq_dim),
                               elapsed_ms_since(start)};
    }
    res.closed = closed;
    res.frequency = trials ? double(closed) / double(trials) : 0.0;
    return res;
}

}  // namespace mcsub
