#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wepsim/core.hpp"
#include "wepsim/engine.hpp"

namespace wepsim {

/// Lifetime metrics of one run. fnd/hnd/lnd are absent (never 0) when the
/// event did not happen before max_rounds.
struct RunSummary {
    ProtocolKind protocol = ProtocolKind::Wep;
    std::uint64_t seed = 0;
    int n = 0;
    double alpha = 0.0;  // heterogeneity echo, used for grouping
    double m = 0.0;
    int final_round = 0;

    std::optional<int> fnd;  // first round a node died
    std::optional<int> hnd;  // first round alive <= floor(n/2)
    std::optional<int> lnd;  // first round alive == 0
    std::optional<int> stable_len;    // fnd - 1
    std::optional<int> unstable_len;  // lnd - fnd + 1

    double stable_energy_fraction = 0.0;    // consumed before fnd / total initial
    double unstable_energy_fraction = 0.0;  // consumed from fnd on / total initial
    double residual_fraction = 0.0;         // stranded energy incl. overshoot clamp
    double total_initial_j = 0.0;
    double total_consumed_j = 0.0;

    std::vector<int> alive_series;       // alive_after per round
    std::vector<double> energy_series;   // joules consumed per round
};

RunSummary summarize(const RunResult& run);

/// Descriptive statistics over the present values of one metric.
struct MetricStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double stddev = 0.0;  // population
    int count = 0;        // values present
    int absent = 0;       // runs where the metric was undefined
};

struct BatchAggregate {
    MetricStats fnd, hnd, lnd, stable_len, unstable_len, stable_energy_fraction;
};

BatchAggregate aggregate(std::span<const RunSummary> summaries);

inline constexpr std::string_view kCsvHeader =
    "round,alive,energy_consumed_j,cumulative_energy_j,ch_count,protocol,seed";

/// Per-round CSV rows under the fixed header. Doubles print as %.17g so the
/// file round-trips exactly and reruns are byte-identical.
void emit_csv(const RunResult& run, const std::filesystem::path& path);
void emit_csv(std::span<const RunResult> runs, const std::filesystem::path& path);
std::string csv_text(std::span<const RunResult> runs);

/// Batch summary document: per-run summaries plus aggregates grouped by
/// (protocol, alpha, m). Key names mirror the RunSummary fields; per-round
/// series live in the CSVs, not here.
std::string summary_json(std::span<const RunResult> runs);
void emit_summary_json(std::span<const RunResult> runs,
                       const std::filesystem::path& path);

}  // namespace wepsim
