#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubehd/builder.hpp"

// Scaling experiment: per (d, trial), find a working construction
// constant by grid climbing, build and verify a representation, then
// greedily minimize it. The CSV is the machine-diffable boundary; the
// schema is fixed and versioned in its header comment line.

namespace cubehd {

struct ExperimentRow {
    int d = 0;
    double c_used = 0.0;
    std::size_t seed_count = 0;
    std::size_t minimized_count = 0;
    double cmo_floor = 0.0;  // (d-1)/log2(d)
    int attempts = 0;        // attempts at the successful grid point
    std::int64_t verify_millis = 0;
};

struct ExperimentConfig {
    int d_min = 2;
    int d_max = 12;
    int trials = 10;
    std::uint64_t rng_seed = 1;
    double c_min = 1.0;
    double c_max = 5.0;
    double c_step = 0.5;
    int restarts_per_c = 20;
};

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

inline constexpr const char* kExperimentCsvVersion = "cubehd-experiment-v1";
inline constexpr const char* kExperimentCsvColumns =
    "d,c_used,seed_count,minimized_count,cmo_floor,attempts,verify_millis";

/// Versioned CSV: a '#' schema line, the column header, one row per
/// (d, trial), and per-d summaries as '#' comment lines so every
/// non-comment data row keeps the exact seven-column schema.
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

}  // namespace cubehd
