#include "mcsub/report.hpp"

namespace mcsub {

std::string csv_header() { return "seed,family,q0_or_n,m_or_k,l,stage_reached,success,sq_dim,elapsed_ms\n"; }

std::string csv_line(const TrialRow& r) {
    return std::to_string(r.seed) + "," + r.family + "," + std::to_string(r.q0_or_n) + "," + std::to_string(r.m_or_k) +
           "," + std::to_string(r.l) + "," + r.stage_reached + "," + std::to_string(r.success) + "," +
           std::to_string(r.sq_dim) + "," + std::to_string(r.elapsed_ms) + "\n";
}

std::string to_csv(const std::vector<TrialRow>& rows) {
    std::string out = csv_header();
    for (const auto& r : rows) out += csv_line(r);
    return out;
}

std::string to_csv_without_timing(const std::vector<TrialRow>& rows) {
    std::string out = csv_header();
    for (auto r : rows) {
        r.elapsed_ms = 0;
        out += csv_line(r);
    }
    return out;
}

}  // namespace mcsub
