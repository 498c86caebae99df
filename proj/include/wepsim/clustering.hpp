#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wepsim/core.hpp"
#include "wepsim/random.hpp"

namespace wepsim {

/// Inter-CH relay order plus the elected uplink owner.
struct ChainPlan {
    std::vector<int> order;                 // permutation of the CH ids
    std::optional<std::size_t> leader_pos;  // index into order, set iff nonempty
};

/// Index of the nearest site for every query (ties -> lowest site index).
/// Serial reference kept as the oracle for the OpenMP kernel.
std::vector<int> nearest_site_serial(std::span<const Point> queries,
                                     std::span<const Point> sites);

/// OpenMP variant of nearest_site_serial. Output is bitwise identical: each
/// query is independent and ties resolve by scan order, not thread order.
std::vector<int> nearest_site(std::span<const Point> queries,
                              std::span<const Point> sites);

/// Maps every alive non-CH node to its nearest CH (ties -> lowest CH id).
/// ch_ids must be ascending and nonempty; result is sorted by member id.
std::vector<std::pair<int, int>> assign_clusters(std::span<const Node> nodes,
                                                 std::span<const int> ch_ids);

/// Greedy chain: starts at the id farthest from the BS, then repeatedly
/// appends the nearest unvisited id to the current tail. All ties resolve
/// toward the lower node id, so the order is deterministic.
std::vector<int> build_greedy_chain(std::span<const int> ids,
                                    std::span<const Point> positions, Point bs);

/// Uniform draw over chain positions. Throws std::logic_error on an empty
/// chain.
std::size_t select_leader(std::span<const int> chain, RandomSource& rng);

/// Itemized cost of one convergecast over the chain: packets flow from both
/// endpoints toward the leader; every non-leader transmits one packet to its
/// neighbor-toward-leader, every receiver pays rx per packet plus re-fusion
/// over (received + own) signals, and the leader pays the single BS uplink.
struct ChainCosts {
    std::vector<std::pair<int, double>> per_node;  // in chain order
    double total_j = 0.0;
};

ChainCosts chain_relay_cost(std::span<const int> chain, std::size_t leader_pos,
                            std::span<const Point> positions, Point bs,
                            const RadioParams& radio);

}  // namespace wepsim
