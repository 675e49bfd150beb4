#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcsub {

/// One experiment or attack trial, in the fixed CSV schema
/// seed,family,q0_or_n,m_or_k,l,stage_reached,success,sq_dim,elapsed_ms.
struct TrialRow {
    std::uint64_t seed = 0;
    std::string family;
    long q0_or_n = 0;
    long m_or_k = 0;
    long l = 0;
    std::string stage_reached;
    int success = 0;
    long sq_dim = 0;
    long elapsed_ms = 0;
};

std::string csv_header();
std::string csv_line(const TrialRow& row);
std::string to_csv(const std::vector<TrialRow>& rows);
// Same CSV with the elapsed_ms column forced to 0 (for determinism checks).
std::string to_csv_without_timing(const std::vector<TrialRow>& rows);

}  // namespace mcsub
