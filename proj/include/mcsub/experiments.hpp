#pragma once

#include "mcsub/attack.hpp"
#include "mcsub/report.hpp"
#include "mcsub/subfield.hpp"

namespace mcsub {

/// Frequency with which seeded l-dimensional subcodes square to the full
/// C(2E).  Both published thresholds on C(l+1, 2) are reported per instance.
struct SquareFillResult {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double frequency = 0.0;
    std::size_t pair_bound = 0;         // C(l+1, 2)
    std::size_t dim_c2e = 0;            // dim C(2E)
    long threshold_low = 0;             // 2k + 1 - g
    long threshold_high = 0;            // 2k - 1 + g
    bool pair_bound_meets_square = false;  // C(l+1,2) >= dim C(2E)
    std::vector<TrialRow> rows;
};

SquareFillResult square_fill_experiment(const CodeSpec& spec, std::size_t l, std::size_t trials, std::uint64_t seed,
                                        unsigned jobs = 1);

/// Subfield subcode of a GRS code, scalars extended back, then the closure
/// attack; resistance means the recovered code is not the enclosing code.
struct SubfieldReport {
    std::size_t subcode_dim = 0;    // over the subfield
    std::size_t extended_dim = 0;   // over the big field
    std::size_t sq_dim = 0;
    std::size_t recovered_dim = 0;
    bool trivial_instance = false;  // subfield subcode was zero
    bool closure_degenerate = false;
    bool recovered_equals_enclosing = false;
    bool recovered_proper_subcode = false;
    bool resistant = false;  // not recovered
    TrialRow row;
};

SubfieldReport subfield_resistance_experiment(const GrsSpec& spec, std::uint32_t subfield_order,
                                              std::uint64_t seed_label = 0);

/// Random-code control: fraction of seeded random [n, l] codes fixed by the
/// 2-closure.
struct RandomClosureResult {
    std::size_t trials = 0;
    std::size_t closed = 0;
    double frequency = 0.0;
    std::vector<TrialRow> rows;
};

RandomClosureResult random_closure_control(FieldPtr field, std::size_t n, std::size_t l, std::size_t trials,
                                           std::uint64_t seed);

}  // namespace mcsub
