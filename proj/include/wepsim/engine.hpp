#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wepsim/core.hpp"
#include "wepsim/protocol.hpp"
#include "wepsim/random.hpp"

namespace wepsim {

struct RunResult {
    SimConfig config;
    std::uint64_t seed = 0;
    int final_round = 0;
    std::vector<RoundStats> rounds;  // contiguous from round 1
    std::vector<RoundLog> logs;      // filled only when run with keep_round_logs
};

/// Builds the initial network. Stream order: x then y per node in ascending
/// id order, then a partial Fisher-Yates draw of the advanced ids. Everything
/// starts alive and election-eligible.
NetworkState init_network(const SimConfig& cfg, RandomSource& rng);

/// Validates cfg, then iterates rounds until every node is dead or max_rounds
/// is reached.
RunResult run_simulation(const SimConfig& cfg, bool keep_round_logs = false);

/// Independent runs of `base`, one per seed. Results are identical whether
/// executed in parallel or sequentially.
std::vector<RunResult> run_batch(const SimConfig& base,
                                 std::span<const std::uint64_t> seeds,
                                 bool parallel = true);

/// Parallel map over fully-specified configs (OpenMP when available; runs
/// share nothing).
std::vector<RunResult> run_many(const std::vector<SimConfig>& cfgs,
                                bool parallel = true);

/// Serial reference for run_many, kept for tests and the benchmark.
std::vector<RunResult> run_many_serial(const std::vector<SimConfig>& cfgs);

}  // namespace wepsim
