#include "wepsim/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "wepsim/engine.hpp"
#include "wepsim/metrics.hpp"
#include "wepsim/svg_report.hpp"

namespace wepsim {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + value + "' for key '" + key + "'");
    }
    if (used != value.size())
        throw std::invalid_argument("bad number '" + value + "' for key '" + key + "'");
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + value + "' for key '" + key + "'");
    }
    if (used != value.size())
        throw std::invalid_argument("bad integer '" + value + "' for key '" + key + "'");
    return v;
}

std::string g6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ExperimentSpec default_experiment() {
    ExperimentSpec spec;
    spec.base = default_config();
    spec.protocols = {ProtocolKind::Wep, ProtocolKind::Sep, ProtocolKind::Leach};
    set_seed_range(spec, 30, 1);
    return spec;
}

void set_seed_range(ExperimentSpec& spec, int count, std::uint64_t base_seed) {
    if (count < 1) throw std::invalid_argument("seed count must be >= 1");
    spec.seeds.clear();
    for (int i = 0; i < count; ++i) spec.seeds.push_back(base_seed + i);
}

ExperimentSpec parse_spec_text(const std::string& text) {
    ExperimentSpec spec = default_experiment();
    int seed_count = 30;
    std::uint64_t base_seed = 1;
    bool explicit_seed_list = false;

    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected 'key = value'");

        auto& cfg = spec.base;
        if (key == "n") cfg.n = static_cast<int>(parse_int(key, value));
        else if (key == "field.width") cfg.field.width = parse_double(key, value);
        else if (key == "field.height") cfg.field.height = parse_double(key, value);
        else if (key == "bs.x") cfg.bs.x = parse_double(key, value);
        else if (key == "bs.y") cfg.bs.y = parse_double(key, value);
        else if (key == "hetero.m") cfg.hetero.m = parse_double(key, value);
        else if (key == "hetero.alpha") cfg.hetero.alpha = parse_double(key, value);
        else if (key == "hetero.e0") cfg.hetero.e0 = parse_double(key, value);
        else if (key == "radio.e_elec") cfg.radio.e_elec = parse_double(key, value);
        else if (key == "radio.eps_amp") cfg.radio.eps_amp = parse_double(key, value);
        else if (key == "radio.e_da") cfg.radio.e_da = parse_double(key, value);
        else if (key == "radio.packet_bits")
            cfg.radio.packet_bits = static_cast<int>(parse_int(key, value));
        else if (key == "p_opt") cfg.p_opt = parse_double(key, value);
        else if (key == "max_rounds") cfg.max_rounds = static_cast<int>(parse_int(key, value));
        else if (key == "protocols") {
            spec.protocols.clear();
            for (const auto& name : split_list(value))
                spec.protocols.push_back(parse_protocol(name));
        } else if (key == "seeds.count") {
            seed_count = static_cast<int>(parse_int(key, value));
        } else if (key == "seeds.base") {
            base_seed = static_cast<std::uint64_t>(parse_int(key, value));
        } else if (key == "seeds.list") {
            spec.seeds.clear();
            for (const auto& s : split_list(value))
                spec.seeds.push_back(static_cast<std::uint64_t>(parse_int(key, s)));
            explicit_seed_list = true;
        } else if (key == "sweep.alpha") {
            spec.sweep_alpha.clear();
            for (const auto& s : split_list(value))
                spec.sweep_alpha.push_back(parse_double(key, s));
        } else if (key == "sweep.m") {
            spec.sweep_m.clear();
            for (const auto& s : split_list(value))
                spec.sweep_m.push_back(parse_double(key, s));
        } else if (key == "output_dir") {
            spec.output_dir = value;
        } else {
            throw std::invalid_argument("unknown key '" + key + "' (line " +
                                        std::to_string(line_no) + ")");
        }
    }

    if (!explicit_seed_list) set_seed_range(spec, seed_count, base_seed);
    if (spec.protocols.empty())
        throw std::invalid_argument("at least one protocol required");
    if (spec.seeds.empty()) throw std::invalid_argument("at least one seed required");
    return spec;
}

ExperimentSpec load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open spec file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str());
}

namespace {

void print_protocol_line(ProtocolKind p, std::span<const RunResult> runs) {
    std::vector<RunSummary> summaries;
    for (const auto& r : runs)
        if (r.config.protocol == p) summaries.push_back(summarize(r));
    const auto agg = aggregate(summaries);
    auto show = [](const MetricStats& st) {
        return st.count > 0 ? g6(st.mean) : std::string("n/a");
    };
    std::cout << to_string(p) << ": mean FND=" << show(agg.fnd)
              << " HND=" << show(agg.hnd) << " LND=" << show(agg.lnd) << " ("
              << summaries.size() << " runs)\n";
}

std::string combo_dir_name(double alpha, double m) {
    return "alpha_" + g6(alpha) + "_m_" + g6(m);
}

/// Shared sweep body; the paper command additionally wants per-combination
/// plots.
int sweep_impl(const ExperimentSpec& spec, bool per_combo_plots) try {
    if (spec.sweep_alpha.empty())
        throw std::invalid_argument("sweep requires a nonempty alpha list");
    const std::vector<double> m_values =
        spec.sweep_m.empty() ? std::vector<double>{spec.base.hetero.m} : spec.sweep_m;

    std::filesystem::create_directories(spec.output_dir);

    std::vector<SimConfig> jobs;
    for (double alpha : spec.sweep_alpha)
        for (double m : m_values)
            for (auto p : spec.protocols)
                for (auto seed : spec.seeds) {
                    SimConfig cfg = spec.base;
                    cfg.hetero.alpha = alpha;
                    cfg.hetero.m = m;
                    cfg.protocol = p;
                    cfg.seed = seed;
                    jobs.push_back(validate_config(cfg));
                }

    const auto results = run_many(jobs);

    // per-combination run CSVs (and plots for the paper command)
    std::string region_csv =
        "alpha,m,protocol,seeds,mean_fnd,mean_lnd,mean_stable_len,mean_unstable_len\n";
    for (double alpha : spec.sweep_alpha) {
        for (double m : m_values) {
            const auto dir = spec.output_dir / combo_dir_name(alpha, m);
            std::filesystem::create_directories(dir);
            std::vector<RunResult> combo;
            for (const auto& r : results)
                if (r.config.hetero.alpha == alpha && r.config.hetero.m == m)
                    combo.push_back(r);
            for (auto p : spec.protocols) {
                std::vector<RunResult> slice;
                for (const auto& r : combo)
                    if (r.config.protocol == p) slice.push_back(r);
                emit_csv(slice, dir / ("runs_" + std::string(to_string(p)) + ".csv"));

                std::vector<RunSummary> summaries;
                for (const auto& r : slice) summaries.push_back(summarize(r));
                const auto agg = aggregate(summaries);
                auto cell = [](const MetricStats& st) {
                    return st.count > 0 ? fmt17(st.mean) : std::string("");
                };
                region_csv += g6(alpha) + "," + g6(m) + "," +
                              std::string(to_string(p)) + "," +
                              std::to_string(summaries.size()) + "," + cell(agg.fnd) +
                              "," + cell(agg.lnd) + "," + cell(agg.stable_len) + "," +
                              cell(agg.unstable_len) + "\n";
            }
            if (per_combo_plots) emit_plots(combo, dir);
        }
    }

    {
        const auto path = spec.output_dir / "region_lengths.csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + path.string() + "'");
        out << region_csv;
    }
    emit_summary_json(results, spec.output_dir / "summary.json");

    // the top-level region chart covers the whole sweep
    {
        std::vector<RunSummary> summaries;
        std::vector<BarSeries> series;
        std::vector<BarGroup> groups;
        for (const auto& r : results) summaries.push_back(summarize(r));
        for (auto p : spec.protocols) {
            series.push_back({std::string(to_string(p)) + " stable",
                              std::string(protocol_color(p)), 1.0});
            series.push_back({std::string(to_string(p)) + " unstable",
                              std::string(protocol_color(p)), 0.4});
        }
        for (double alpha : spec.sweep_alpha)
            for (double m : m_values) {
                BarGroup g;
                g.label = "alpha=" + g6(alpha) + " m=" + g6(m);
                for (auto p : spec.protocols) {
                    std::vector<RunSummary> group;
                    for (const auto& s : summaries)
                        if (s.protocol == p && s.alpha == alpha && s.m == m)
                            group.push_back(s);
                    const auto agg = aggregate(group);
                    g.values.push_back(agg.stable_len.count > 0 ? agg.stable_len.mean
                                                                : 0.0);
                    g.values.push_back(agg.unstable_len.count > 0
                                           ? agg.unstable_len.mean
                                           : 0.0);
                }
                groups.push_back(std::move(g));
            }
        const auto path = spec.output_dir / "region_lengths.svg";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + path.string() + "'");
        out << bar_chart_svg("Stable and unstable region lengths", "rounds", series,
                             groups);
    }

    for (double alpha : spec.sweep_alpha)
        for (double m : m_values) {
            std::cout << "alpha=" << g6(alpha) << " m=" << g6(m) << "\n";
            std::vector<RunResult> combo;
            for (const auto& r : results)
                if (r.config.hetero.alpha == alpha && r.config.hetero.m == m)
                    combo.push_back(r);
            for (auto p : spec.protocols) print_protocol_line(p, combo);
        }
    return 0;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}

}  // namespace

int cmd_run(const ExperimentSpec& spec) try {
    if (spec.protocols.empty())
        throw std::invalid_argument("at least one protocol required");
    if (spec.seeds.empty()) throw std::invalid_argument("at least one seed required");

    std::filesystem::create_directories(spec.output_dir);

    std::vector<SimConfig> jobs;
    for (auto p : spec.protocols)
        for (auto seed : spec.seeds) {
            SimConfig cfg = spec.base;
            cfg.protocol = p;
            cfg.seed = seed;
            jobs.push_back(validate_config(cfg));
        }

    const auto results = run_many(jobs);

    for (auto p : spec.protocols) {
        std::vector<RunResult> slice;
        for (const auto& r : results)
            if (r.config.protocol == p) slice.push_back(r);
        emit_csv(slice, spec.output_dir / ("runs_" + std::string(to_string(p)) + ".csv"));
    }
    emit_summary_json(results, spec.output_dir / "summary.json");
    emit_plots(results, spec.output_dir);

    for (auto p : spec.protocols) print_protocol_line(p, results);
    return 0;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}

int cmd_sweep(const ExperimentSpec& spec) { return sweep_impl(spec, false); }

int cmd_paper(const std::filesystem::path& output_dir) {
    ExperimentSpec spec = default_experiment();
    spec.protocols = {ProtocolKind::Wep, ProtocolKind::Sep, ProtocolKind::Leach,
                      ProtocolKind::Pegasis, ProtocolKind::Direct};
    spec.sweep_alpha = {1.0, 2.0, 3.0, 4.0};
    spec.sweep_m = {0.2};
    spec.output_dir = output_dir;
    return sweep_impl(spec, true);
}

}  // namespace wepsim
