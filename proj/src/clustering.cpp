#include "wepsim/clustering.hpp"

#include <cstdint>
#include <stdexcept>

#include "wepsim/radio.hpp"

namespace wepsim {

namespace {
// below this many distance evaluations the OpenMP fork costs more than it buys
constexpr std::int64_t kParallelGrain = 1 << 15;
}  // namespace

std::vector<int> nearest_site_serial(std::span<const Point> queries,
                                     std::span<const Point> sites) {
    std::vector<int> out(queries.size(), -1);
    for (std::size_t i = 0; i < queries.size(); ++i) {
        double best = 0.0;
        int best_idx = -1;
        for (std::size_t j = 0; j < sites.size(); ++j) {
            const double d2 = squared_distance(queries[i], sites[j]);
            if (best_idx < 0 || d2 < best) {
                best = d2;
                best_idx = static_cast<int>(j);
            }
        }
        out[i] = best_idx;
    }
    return out;
}

std::vector<int> nearest_site(std::span<const Point> queries,
                              std::span<const Point> sites) {
    std::vector<int> out(queries.size(), -1);
    const auto nq = static_cast<std::int64_t>(queries.size());
    const auto work = nq * static_cast<std::int64_t>(sites.size());
#pragma omp parallel for schedule(static) if (work >= kParallelGrain)
    for (std::int64_t i = 0; i < nq; ++i) {
        double best = 0.0;
        int best_idx = -1;
        for (std::size_t j = 0; j < sites.size(); ++j) {
            const double d2 = squared_distance(queries[i], sites[j]);
            if (best_idx < 0 || d2 < best) {
                best = d2;
                best_idx = static_cast<int>(j);
            }
        }
        out[i] = best_idx;
    }
    return out;
}

std::vector<std::pair<int, int>> assign_clusters(std::span<const Node> nodes,
                                                 std::span<const int> ch_ids) {
    if (ch_ids.empty()) throw std::logic_error("assign_clusters: empty CH set");

    std::vector<bool> is_head(nodes.size(), false);
    std::vector<Point> sites;
    sites.reserve(ch_ids.size());
    for (int ch : ch_ids) {
        is_head[ch] = true;
        sites.push_back(nodes[ch].pos);
    }

    std::vector<int> member_ids;
    std::vector<Point> queries;
    for (const auto& nd : nodes) {
        if (!nd.alive || is_head[nd.id]) continue;
        member_ids.push_back(nd.id);
        queries.push_back(nd.pos);
    }

    const auto site_idx = nearest_site(queries, sites);

    std::vector<std::pair<int, int>> assignment;
    assignment.reserve(member_ids.size());
    for (std::size_t i = 0; i < member_ids.size(); ++i)
        assignment.emplace_back(member_ids[i], ch_ids[site_idx[i]]);
    return assignment;
}

std::vector<int> build_greedy_chain(std::span<const int> ids,
                                    std::span<const Point> positions, Point bs) {
    std::vector<int> chain;
    if (ids.empty()) return chain;
    chain.reserve(ids.size());

    std::vector<bool> used(ids.size(), false);

    // seed with the id farthest from the BS; ascending scan keeps the lowest
    // id on ties
    std::size_t start = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const double d2 = squared_distance(positions[ids[i]], bs);
        if (d2 > best) {
            best = d2;
            start = i;
        }
    }
    chain.push_back(ids[start]);
    used[start] = true;

    while (chain.size() < ids.size()) {
        const Point tail = positions[chain.back()];
        std::size_t next = 0;
        double nearest = -1.0;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (used[i]) continue;
            const double d2 = squared_distance(positions[ids[i]], tail);
            if (nearest < 0.0 || d2 < nearest) {
                nearest = d2;
                next = i;
            }
        }
        chain.push_back(ids[next]);
        used[next] = true;
    }
    return chain;
}

std::size_t select_leader(std::span<const int> chain, RandomSource& rng) {
    if (chain.empty()) throw std::logic_error("select_leader: empty chain");
    return rng.next_index(chain.size());
}

ChainCosts chain_relay_cost(std::span<const int> chain, std::size_t leader_pos,
                            std::span<const Point> positions, Point bs,
                            const RadioParams& radio) {
    if (chain.empty()) throw std::logic_error("chain_relay_cost: empty chain");
    if (leader_pos >= chain.size())
        throw std::logic_error("chain_relay_cost: leader_pos out of range");

    const double k = radio.packet_bits;
    const std::size_t len = chain.size();

    std::vector<int> received(len, 0);
    std::vector<double> cost(len, 0.0);

    for (std::size_t i = 0; i < len; ++i) {
        if (i == leader_pos) continue;
        const std::size_t to = i < leader_pos ? i + 1 : i - 1;
        cost[i] += tx_cost(radio, k, distance(positions[chain[i]], positions[chain[to]]));
        ++received[to];
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (received[i] == 0) continue;  // nothing new to fuse at the endpoints
        cost[i] += received[i] * rx_cost(radio, k);
        cost[i] += agg_cost(radio, k, received[i] + 1);
    }
    cost[leader_pos] += tx_cost(radio, k, distance(positions[chain[leader_pos]], bs));

    ChainCosts result;
    result.per_node.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        result.per_node.emplace_back(chain[i], cost[i]);
        result.total_j += cost[i];
    }
    return result;
}

}  // namespace wepsim
