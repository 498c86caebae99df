#include "wepsim/svg_report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace wepsim {

namespace {

constexpr double kWidth = 1000.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 810.0;   // legend lives to the right of this
constexpr double kTop = 60.0;
constexpr double kBottom = 540.0;

std::string f2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string svg_open() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 600\" "
           "font-family=\"sans-serif\" font-size=\"14\">\n"
           "<rect width=\"1000\" height=\"600\" fill=\"white\"/>\n";
}

void add_title(std::string& svg, const std::string& title) {
    svg += "<text x=\"500\" y=\"30\" text-anchor=\"middle\" font-size=\"18\">" +
           title + "</text>\n";
}

void add_axes(std::string& svg, const std::string& x_label, const std::string& y_label) {
    svg += "<line x1=\"" + f2(kLeft) + "\" y1=\"" + f2(kBottom) + "\" x2=\"" +
           f2(kRight) + "\" y2=\"" + f2(kBottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + f2(kLeft) + "\" y1=\"" + f2(kTop) + "\" x2=\"" + f2(kLeft) +
           "\" y2=\"" + f2(kBottom) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + f2((kLeft + kRight) / 2) +
           "\" y=\"580\" text-anchor=\"middle\">" + x_label + "</text>\n";
    svg += "<text x=\"22\" y=\"" + f2((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 22 " +
           f2((kTop + kBottom) / 2) + ")\">" + y_label + "</text>\n";
}

void add_y_ticks(std::string& svg, double y_max) {
    for (int t = 0; t <= 5; ++t) {
        const double value = y_max * t / 5.0;
        const double y = kBottom - (kBottom - kTop) * t / 5.0;
        svg += "<line x1=\"" + f2(kLeft - 5) + "\" y1=\"" + f2(y) + "\" x2=\"" +
               f2(kLeft) + "\" y2=\"" + f2(y) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + f2(kLeft - 9) + "\" y=\"" + f2(y + 5) +
               "\" text-anchor=\"end\" font-size=\"12\">" + g6(value) + "</text>\n";
    }
}

void add_legend(std::string& svg, std::span<const std::pair<std::string, std::string>> entries) {
    double y = kTop + 10;
    for (const auto& [label, color] : entries) {
        svg += "<rect x=\"825\" y=\"" + f2(y - 11) +
               "\" width=\"14\" height=\"14\" fill=\"" + color + "\"/>\n";
        svg += "<text x=\"845\" y=\"" + f2(y) + "\" font-size=\"13\">" + label +
               "</text>\n";
        y += 22;
    }
}

}  // namespace

std::string_view protocol_color(ProtocolKind p) {
    switch (p) {
        case ProtocolKind::Wep: return "#d62728";
        case ProtocolKind::Sep: return "#1f77b4";
        case ProtocolKind::Leach: return "#2ca02c";
        case ProtocolKind::Pegasis: return "#9467bd";
        case ProtocolKind::Direct: return "#7f7f7f";
    }
    return "#000000";
}

std::string line_chart_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           std::span<const LineSeries> series) {
    double x_max = 1.0, y_max = 1.0;
    for (const auto& s : series) {
        for (double x : s.xs) x_max = std::max(x_max, x);
        for (double y : s.ys) y_max = std::max(y_max, y);
    }

    std::string svg = svg_open();
    add_title(svg, title);
    add_axes(svg, x_label, y_label);
    add_y_ticks(svg, y_max);

    for (int t = 0; t <= 5; ++t) {
        const double value = x_max * t / 5.0;
        const double x = kLeft + (kRight - kLeft) * t / 5.0;
        svg += "<line x1=\"" + f2(x) + "\" y1=\"" + f2(kBottom) + "\" x2=\"" + f2(x) +
               "\" y2=\"" + f2(kBottom + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + f2(x) + "\" y=\"" + f2(kBottom + 20) +
               "\" text-anchor=\"middle\" font-size=\"12\">" + g6(value) + "</text>\n";
    }

    std::vector<std::pair<std::string, std::string>> legend;
    for (const auto& s : series) {
        svg += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            const double px = kLeft + (kRight - kLeft) * s.xs[i] / x_max;
            const double py = kBottom - (kBottom - kTop) * s.ys[i] / y_max;
            svg += f2(px) + "," + f2(py) + " ";
        }
        svg += "\"/>\n";
        legend.emplace_back(s.label, s.color);
    }
    add_legend(svg, legend);
    svg += "</svg>\n";
    return svg;
}

std::string bar_chart_svg(const std::string& title, const std::string& y_label,
                          std::span<const BarSeries> series,
                          std::span<const BarGroup> groups) {
    double y_max = 1.0;
    for (const auto& g : groups)
        for (double v : g.values) y_max = std::max(y_max, v);
    y_max *= 1.05;

    std::string svg = svg_open();
    add_title(svg, title);
    add_axes(svg, "", y_label);
    add_y_ticks(svg, y_max);

    const double group_width = (kRight - kLeft) / std::max<std::size_t>(1, groups.size());
    const double bar_width = group_width * 0.8 / std::max<std::size_t>(1, series.size());

    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& g = groups[gi];
        const double gx = kLeft + group_width * gi + group_width * 0.1;
        for (std::size_t si = 0; si < series.size() && si < g.values.size(); ++si) {
            const double h = (kBottom - kTop) * g.values[si] / y_max;
            svg += "<rect x=\"" + f2(gx + bar_width * si) + "\" y=\"" +
                   f2(kBottom - h) + "\" width=\"" + f2(bar_width * 0.92) +
                   "\" height=\"" + f2(h) + "\" fill=\"" + series[si].color +
                   "\" fill-opacity=\"" + f2(series[si].opacity) + "\"/>\n";
        }
        svg += "<text x=\"" + f2(gx + group_width * 0.4) + "\" y=\"" +
               f2(kBottom + 20) + "\" text-anchor=\"middle\" font-size=\"12\">" +
               g.label + "</text>\n";
    }

    std::vector<std::pair<std::string, std::string>> legend;
    for (const auto& s : series) legend.emplace_back(s.label, s.color);
    add_legend(svg, legend);
    svg += "</svg>\n";
    return svg;
}

std::vector<std::pair<ProtocolKind, EnergySplit>> energy_split(
    std::span<const RunSummary> summaries) {
    std::vector<std::pair<ProtocolKind, EnergySplit>> out;
    std::vector<int> counts;
    for (const auto& s : summaries) {
        std::size_t idx = out.size();
        for (std::size_t i = 0; i < out.size(); ++i)
            if (out[i].first == s.protocol) idx = i;
        if (idx == out.size()) {
            out.emplace_back(s.protocol, EnergySplit{});
            counts.push_back(0);
        }
        out[idx].second.stable_j += s.stable_energy_fraction * s.total_initial_j;
        out[idx].second.unstable_j += s.unstable_energy_fraction * s.total_initial_j;
        ++counts[idx];
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].second.stable_j /= counts[i];
        out[i].second.unstable_j /= counts[i];
    }
    return out;
}

std::vector<std::filesystem::path> emit_plots(std::span<const RunResult> runs,
                                              const std::filesystem::path& dir) {
    if (runs.empty()) throw std::invalid_argument("emit_plots: empty batch");
    std::filesystem::create_directories(dir);

    std::vector<RunSummary> summaries;
    summaries.reserve(runs.size());
    for (const auto& run : runs) summaries.push_back(summarize(run));

    // protocols in order of first appearance
    std::vector<ProtocolKind> protocols;
    for (const auto& run : runs)
        if (std::find(protocols.begin(), protocols.end(), run.config.protocol) ==
            protocols.end())
            protocols.push_back(run.config.protocol);

    // (a) alive-vs-round curves, one representative run (first in batch order)
    // per protocol
    std::vector<LineSeries> curves;
    for (auto p : protocols) {
        const RunResult* rep = nullptr;
        for (const auto& run : runs)
            if (run.config.protocol == p && !rep) rep = &run;
        LineSeries s;
        s.label = to_string(p);
        s.color = protocol_color(p);
        const auto total = static_cast<std::size_t>(rep->final_round);
        const std::size_t stride = std::max<std::size_t>(1, total / 2000);
        s.xs.push_back(0.0);
        s.ys.push_back(rep->rounds.front().alive_before);
        for (std::size_t i = 0; i < rep->rounds.size(); ++i) {
            if (i % stride != 0 && i + 1 != rep->rounds.size()) continue;
            s.xs.push_back(rep->rounds[i].round);
            s.ys.push_back(rep->rounds[i].alive_after);
        }
        curves.push_back(std::move(s));
    }
    const auto alive_path = dir / "alive_vs_round.svg";
    {
        std::ofstream out(alive_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + alive_path.string() + "'");
        out << line_chart_svg("Alive nodes per round", "round", "alive nodes", curves);
    }

    // (b) stable/unstable region lengths, grouped by heterogeneity setting
    std::vector<std::pair<double, double>> combos;
    for (const auto& s : summaries) {
        const std::pair combo{s.alpha, s.m};
        if (std::find(combos.begin(), combos.end(), combo) == combos.end())
            combos.push_back(combo);
    }
    std::vector<BarSeries> region_series;
    for (auto p : protocols) {
        region_series.push_back(
            {std::string(to_string(p)) + " stable", std::string(protocol_color(p)), 1.0});
        region_series.push_back({std::string(to_string(p)) + " unstable",
                                 std::string(protocol_color(p)), 0.4});
    }
    std::vector<BarGroup> region_groups;
    for (const auto& [alpha, m] : combos) {
        BarGroup g;
        g.label = "alpha=" + g6(alpha) + " m=" + g6(m);
        for (auto p : protocols) {
            std::vector<RunSummary> group;
            for (const auto& s : summaries)
                if (s.protocol == p && s.alpha == alpha && s.m == m) group.push_back(s);
            if (group.empty()) {
                g.values.push_back(0.0);
                g.values.push_back(0.0);
                continue;
            }
            const auto agg = aggregate(group);
            g.values.push_back(agg.stable_len.count > 0 ? agg.stable_len.mean : 0.0);
            g.values.push_back(agg.unstable_len.count > 0 ? agg.unstable_len.mean : 0.0);
        }
        region_groups.push_back(std::move(g));
    }
    const auto region_path = dir / "region_lengths.svg";
    {
        std::ofstream out(region_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + region_path.string() + "'");
        out << bar_chart_svg("Stable and unstable region lengths", "rounds",
                             region_series, region_groups);
    }

    // (c) energy consumed in the stable vs unstable region per protocol
    const auto split = energy_split(summaries);
    const std::vector<BarSeries> split_series{{"stable region", "#4878a8", 1.0},
                                              {"unstable region", "#f2a047", 1.0}};
    std::vector<BarGroup> split_groups;
    for (const auto& [p, e] : split)
        split_groups.push_back(
            {std::string(to_string(p)), {e.stable_j, e.unstable_j}});
    const auto split_path = dir / "energy_split.svg";
    {
        std::ofstream out(split_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + split_path.string() + "'");
        out << bar_chart_svg("Energy consumption by region", "joules", split_series,
                             split_groups);
    }

    return {alive_path, region_path, split_path};
}

}  // namespace wepsim
