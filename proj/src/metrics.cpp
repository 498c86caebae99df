#include "wepsim/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace wepsim {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

RunSummary summarize(const RunResult& run) {
    if (run.rounds.empty()) throw std::invalid_argument("summarize: run has no rounds");

    RunSummary s;
    s.protocol = run.config.protocol;
    s.seed = run.seed;
    s.n = run.config.n;
    s.alpha = run.config.hetero.alpha;
    s.m = run.config.hetero.m;
    s.final_round = run.final_round;
    s.total_initial_j = total_initial_energy(run.config);

    const int half = run.config.n / 2;
    s.alive_series.reserve(run.rounds.size());
    s.energy_series.reserve(run.rounds.size());
    for (const auto& rs : run.rounds) {
        s.alive_series.push_back(rs.alive_after);
        s.energy_series.push_back(rs.energy_consumed_j);
        s.total_consumed_j += rs.energy_consumed_j;
        if (!s.fnd && rs.alive_after < run.config.n) s.fnd = rs.round;
        if (!s.hnd && rs.alive_after <= half) s.hnd = rs.round;
        if (!s.lnd && rs.alive_after == 0) s.lnd = rs.round;
    }

    if (s.fnd) {
        s.stable_len = *s.fnd - 1;
        if (s.lnd) s.unstable_len = *s.lnd - *s.fnd + 1;
    }

    // stable region = rounds fully completed before the first death; without
    // a death it spans every completed round
    const int stable_rounds = s.fnd ? *s.fnd - 1 : run.final_round;
    double stable_j = 0.0;
    for (int i = 0; i < stable_rounds; ++i) stable_j += s.energy_series[i];
    s.stable_energy_fraction = stable_j / s.total_initial_j;
    s.unstable_energy_fraction = (s.total_consumed_j - stable_j) / s.total_initial_j;
    // negative residuals from the final over-debits show up here instead of
    // being silently absorbed
    s.residual_fraction = run.rounds.back().residual_total_j / s.total_initial_j;
    return s;
}

namespace {

class Welford {
public:
    void add(double x) {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / n_;
        m2_ += delta * (x - mean_);
        if (n_ == 1 || x < min_) min_ = x;
        if (n_ == 1 || x > max_) max_ = x;
    }

    MetricStats stats(int absent) const {
        MetricStats st;
        st.count = n_;
        st.absent = absent;
        if (n_ > 0) {
            st.mean = mean_;
            st.min = min_;
            st.max = max_;
            st.stddev = std::sqrt(m2_ / n_);
        }
        return st;
    }

private:
    int n_ = 0;
    double mean_ = 0.0, m2_ = 0.0, min_ = 0.0, max_ = 0.0;
};

}  // namespace

BatchAggregate aggregate(std::span<const RunSummary> summaries) {
    if (summaries.empty()) throw std::invalid_argument("aggregate: empty batch");

    Welford fnd, hnd, lnd, stable, unstable, fraction;
    int fnd_absent = 0, hnd_absent = 0, lnd_absent = 0, stable_absent = 0,
        unstable_absent = 0;
    for (const auto& s : summaries) {
        s.fnd ? fnd.add(*s.fnd) : void(++fnd_absent);
        s.hnd ? hnd.add(*s.hnd) : void(++hnd_absent);
        s.lnd ? lnd.add(*s.lnd) : void(++lnd_absent);
        s.stable_len ? stable.add(*s.stable_len) : void(++stable_absent);
        s.unstable_len ? unstable.add(*s.unstable_len) : void(++unstable_absent);
        fraction.add(s.stable_energy_fraction);
    }

    BatchAggregate agg;
    agg.fnd = fnd.stats(fnd_absent);
    agg.hnd = hnd.stats(hnd_absent);
    agg.lnd = lnd.stats(lnd_absent);
    agg.stable_len = stable.stats(stable_absent);
    agg.unstable_len = unstable.stats(unstable_absent);
    agg.stable_energy_fraction = fraction.stats(0);
    return agg;
}

std::string csv_text(std::span<const RunResult> runs) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const auto& run : runs) {
        const auto protocol = to_string(run.config.protocol);
        double cumulative = 0.0;
        for (const auto& rs : run.rounds) {
            cumulative += rs.energy_consumed_j;
            out += std::to_string(rs.round);
            out += ',';
            out += std::to_string(rs.alive_after);
            out += ',';
            out += fmt_double(rs.energy_consumed_j);
            out += ',';
            out += fmt_double(cumulative);
            out += ',';
            out += std::to_string(rs.ch_count);
            out += ',';
            out += protocol;
            out += ',';
            out += std::to_string(run.seed);
            out += '\n';
        }
    }
    return out;
}

void emit_csv(const RunResult& run, const std::filesystem::path& path) {
    emit_csv(std::span<const RunResult>(&run, 1), path);
}

void emit_csv(std::span<const RunResult> runs, const std::filesystem::path& path) {
    write_file(path, csv_text(runs));
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt_json(const std::optional<int>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json stats_json(const MetricStats& st) {
    ordered_json j;
    j["mean"] = st.count > 0 ? ordered_json(st.mean) : ordered_json(nullptr);
    j["min"] = st.count > 0 ? ordered_json(st.min) : ordered_json(nullptr);
    j["max"] = st.count > 0 ? ordered_json(st.max) : ordered_json(nullptr);
    j["stddev"] = st.count > 0 ? ordered_json(st.stddev) : ordered_json(nullptr);
    j["count"] = st.count;
    j["absent"] = st.absent;
    return j;
}

}  // namespace

std::string summary_json(std::span<const RunResult> runs) {
    if (runs.empty()) throw std::invalid_argument("summary_json: empty batch");

    std::vector<RunSummary> summaries;
    summaries.reserve(runs.size());
    for (const auto& run : runs) summaries.push_back(summarize(run));

    ordered_json doc;
    doc["runs"] = ordered_json::array();
    for (const auto& s : summaries) {
        ordered_json j;
        j["protocol"] = to_string(s.protocol);
        j["seed"] = s.seed;
        j["n"] = s.n;
        j["alpha"] = s.alpha;
        j["m"] = s.m;
        j["final_round"] = s.final_round;
        j["fnd"] = opt_json(s.fnd);
        j["hnd"] = opt_json(s.hnd);
        j["lnd"] = opt_json(s.lnd);
        j["stable_len"] = opt_json(s.stable_len);
        j["unstable_len"] = opt_json(s.unstable_len);
        j["stable_energy_fraction"] = s.stable_energy_fraction;
        j["unstable_energy_fraction"] = s.unstable_energy_fraction;
        j["residual_fraction"] = s.residual_fraction;
        j["total_initial_j"] = s.total_initial_j;
        j["total_consumed_j"] = s.total_consumed_j;
        doc["runs"].push_back(std::move(j));
    }

    // aggregates per (protocol, alpha, m), in order of first appearance
    std::vector<std::tuple<ProtocolKind, double, double>> keys;
    doc["aggregates"] = ordered_json::array();
    for (const auto& s : summaries) {
        const std::tuple key{s.protocol, s.alpha, s.m};
        bool seen = false;
        for (const auto& k : keys) seen = seen || k == key;
        if (seen) continue;
        keys.push_back(key);

        std::vector<RunSummary> group;
        for (const auto& g : summaries)
            if (std::tuple{g.protocol, g.alpha, g.m} == key) group.push_back(g);
        const auto agg = aggregate(group);

        ordered_json j;
        j["protocol"] = to_string(s.protocol);
        j["alpha"] = s.alpha;
        j["m"] = s.m;
        j["seeds"] = group.size();
        j["fnd"] = stats_json(agg.fnd);
        j["hnd"] = stats_json(agg.hnd);
        j["lnd"] = stats_json(agg.lnd);
        j["stable_len"] = stats_json(agg.stable_len);
        j["unstable_len"] = stats_json(agg.unstable_len);
        j["stable_energy_fraction"] = stats_json(agg.stable_energy_fraction);
        doc["aggregates"].push_back(std::move(j));
    }

    return doc.dump(2) + "\n";
}

void emit_summary_json(std::span<const RunResult> runs,
                       const std::filesystem::path& path) {
    write_file(path, summary_json(runs));
}

}  // namespace wepsim
