#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wepsim/engine.hpp"
#include "wepsim/metrics.hpp"

namespace wepsim {

/// Fixed series color per protocol (see README for the palette).
std::string_view protocol_color(ProtocolKind p);

struct LineSeries {
    std::string label;
    std::string color;
    std::vector<double> xs;
    std::vector<double> ys;
};

struct BarSeries {
    std::string label;
    std::string color;
    double opacity = 1.0;
};

struct BarGroup {
    std::string label;
    std::vector<double> values;  // one per BarSeries
};

/// Self-contained 1000x600 charts, no external renderer. Float formatting is
/// pinned so identical inputs produce byte-identical files.
std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           std::span<const LineSeries> series);

std::string bar_chart_svg(const std::string& title, const std::string& y_label,
                          std::span<const BarSeries> series,
                          std::span<const BarGroup> groups);

struct EnergySplit {
    double stable_j = 0.0;
    double unstable_j = 0.0;
};

/// Mean stable/unstable-region consumption per protocol, in order of first
/// appearance. stable_j + unstable_j equals the mean total consumed energy.
std::vector<std::pair<ProtocolKind, EnergySplit>> energy_split(
    std::span<const RunSummary> summaries);

/// Writes alive_vs_round.svg, region_lengths.svg and energy_split.svg for the
/// batch and returns the paths. Throws on an empty batch or I/O failure.
std::vector<std::filesystem::path> emit_plots(std::span<const RunResult> runs,
                                              const std::filesystem::path& dir);

}  // namespace wepsim
