#include "wepsim/engine.hpp"

#include <cstdint>
#include <exception>
#include <numeric>
#include <utility>

namespace wepsim {

NetworkState init_network(const SimConfig& cfg, RandomSource& rng) {
    NetworkState state;
    state.nodes.resize(cfg.n);
    state.positions.resize(cfg.n);

    for (int i = 0; i < cfg.n; ++i) {
        auto& nd = state.nodes[i];
        nd.id = i;
        nd.pos.x = rng.next_unit() * cfg.field.width;
        nd.pos.y = rng.next_unit() * cfg.field.height;
        state.positions[i] = nd.pos;
    }

    // uniform distinct sample of advanced ids via partial Fisher-Yates
    const int adv = advanced_count(cfg);
    std::vector<int> ids(cfg.n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < adv; ++i) {
        const std::size_t j = i + rng.next_index(static_cast<std::size_t>(cfg.n - i));
        std::swap(ids[i], ids[j]);
    }
    for (int i = 0; i < adv; ++i) state.nodes[ids[i]].cls = NodeClass::Advanced;

    for (auto& nd : state.nodes) {
        nd.initial_energy = nd.cls == NodeClass::Advanced
                                ? cfg.hetero.e0 * (1.0 + cfg.hetero.alpha)
                                : cfg.hetero.e0;
        nd.energy = nd.initial_energy;
        nd.alive = true;
        nd.elected_in_epoch = false;
    }

    state.probs = probabilities_for(cfg);
    return state;
}

RunResult run_simulation(const SimConfig& cfg_in, bool keep_round_logs) {
    const SimConfig cfg = validate_config(cfg_in);

    RunResult result;
    result.config = cfg;
    result.seed = cfg.seed;

    Mt64Source rng(cfg.seed);
    NetworkState state = init_network(cfg, rng);

    int alive = state.alive_count();
    for (int r = 1; r <= cfg.max_rounds && alive > 0; ++r) {
        RoundLog log = run_round(state, cfg, r, rng);
        alive = log.alive_after;
        result.rounds.push_back(to_stats(log));
        if (keep_round_logs) result.logs.push_back(std::move(log));
        result.final_round = r;
    }
    return result;
}

std::vector<RunResult> run_many(const std::vector<SimConfig>& cfgs, bool parallel) {
    std::vector<RunResult> results(cfgs.size());
    std::exception_ptr failure = nullptr;
    const auto count = static_cast<std::int64_t>(cfgs.size());

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            results[i] = run_simulation(cfgs[i]);
        } catch (...) {
#pragma omp critical(wepsim_run_many_failure)
            if (!failure) failure = std::current_exception();
        }
    }

    if (failure) std::rethrow_exception(failure);
    return results;
}

std::vector<RunResult> run_many_serial(const std::vector<SimConfig>& cfgs) {
    std::vector<RunResult> results;
    results.reserve(cfgs.size());
    for (const auto& cfg : cfgs) results.push_back(run_simulation(cfg));
    return results;
}

std::vector<RunResult> run_batch(const SimConfig& base,
                                 std::span<const std::uint64_t> seeds,
                                 bool parallel) {
    std::vector<SimConfig> cfgs(seeds.size(), base);
    for (std::size_t i = 0; i < seeds.size(); ++i) cfgs[i].seed = seeds[i];
    return parallel ? run_many(cfgs) : run_many_serial(cfgs);
}

}  // namespace wepsim
