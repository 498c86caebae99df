#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "wepsim/core.hpp"

namespace wepsim {

/// Full experiment description: a base scenario, the protocols to compare,
/// the replication seeds and optional (alpha, m) sweep lists.
struct ExperimentSpec {
    SimConfig base;
    std::vector<ProtocolKind> protocols;
    std::vector<std::uint64_t> seeds;
    std::vector<double> sweep_alpha;  // used by the sweep command
    std::vector<double> sweep_m;
    std::filesystem::path output_dir = "out";
};

/// Paper-style defaults: the built-in scenario, WEP/SEP/LEACH, seeds 1..30.
ExperimentSpec default_experiment();

/// Parses the flat key-value spec format (see README for the grammar).
/// Unknown keys and malformed values throw std::invalid_argument naming the
/// offending token.
ExperimentSpec load_spec_file(const std::filesystem::path& path);
ExperimentSpec parse_spec_text(const std::string& text);

/// Replaces the seed list with count seeds starting at base_seed.
void set_seed_range(ExperimentSpec& spec, int count, std::uint64_t base_seed);

/// Runs every (protocol, seed) pair and writes runs_<PROTOCOL>.csv per
/// protocol, summary.json and the three SVG plots under output_dir. Returns
/// the process exit status (0 on success) and prints one summary line per
/// protocol.
int cmd_run(const ExperimentSpec& spec);

/// Cross-product of (protocol, alpha, m, seed) runs; writes per-combination
/// run CSVs under subdirectories plus region_lengths.csv, region_lengths.svg
/// and summary.json at the top level.
int cmd_sweep(const ExperimentSpec& spec);

/// Convenience command: the four built-in heterogeneity cases (m=0.2,
/// alpha=1..4) across all five protocols, with per-case plots.
int cmd_paper(const std::filesystem::path& output_dir);

}  // namespace wepsim
