#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wepsim/election.hpp"

#include "support/test_rng.hpp"

namespace wepsim::testing {

/// Exhaustive check of the election pool mechanism: enumerates every
/// pass/fail pattern the threshold draws can produce over one epoch of a
/// homogeneous network and verifies that each alive node is elected CH
/// exactly once. Nodes whose threshold has reached 1 cannot fail, so those
/// branches are not enumerated. Returns the number of leaf paths verified;
/// any violation is reported through `fail` and counted.
struct EpochEnumeration {
    long paths = 0;
    long violations = 0;
};

inline EpochEnumeration enumerate_epoch_paths(
    std::vector<Node> nodes, double p,
    const std::function<void(const std::string&)>& fail) {
    const ElectionProbabilities probs{p, p};
    const int window = eligibility_window(p);
    EpochEnumeration result;

    std::vector<int> elected_count(nodes.size(), 0);

    std::function<void(std::vector<Node>&, std::vector<int>&, int)> recurse =
        [&](std::vector<Node>& state, std::vector<int>& counts, int round0) {
            if (round0 == window) {
                ++result.paths;
                for (const auto& nd : state) {
                    if (nd.alive && counts[nd.id] != 1) {
                        ++result.violations;
                        fail("node " + std::to_string(nd.id) + " elected " +
                             std::to_string(counts[nd.id]) + " times in one epoch");
                    }
                    if (!nd.alive && counts[nd.id] != 0) {
                        ++result.violations;
                        fail("dead node " + std::to_string(nd.id) + " was elected");
                    }
                }
                return;
            }

            // pool members of this round, in the draw order the election uses
            std::vector<int> pool;
            for (const auto& nd : state)
                if (nd.alive && !nd.elected_in_epoch) pool.push_back(nd.id);

            const double threshold = election_threshold(p, round0, true);
            const auto subsets = 1u << pool.size();
            for (unsigned mask = 0; mask < subsets; ++mask) {
                // a threshold at or above 1 forces every pool member to pass
                if (threshold >= 1.0 && mask + 1 != subsets) continue;

                ScriptedSource rng;
                std::vector<int> expected;
                for (std::size_t i = 0; i < pool.size(); ++i) {
                    const bool pass = (mask >> i) & 1u;
                    rng.units.push_back(pass ? threshold / 2.0
                                             : threshold + (1.0 - threshold) / 2.0);
                    if (pass) expected.push_back(pool[i]);
                }

                std::vector<Node> next = state;
                std::vector<int> next_counts = counts;
                const auto heads = elect_cluster_heads(next, probs, round0, rng);
                if (heads != expected) {
                    ++result.violations;
                    fail("scripted draws elected an unexpected CH set at round " +
                         std::to_string(round0));
                    continue;
                }
                for (int id : heads) ++next_counts[id];
                recurse(next, next_counts, round0 + 1);
            }
        };

    recurse(nodes, elected_count, 0);
    return result;
}

}  // namespace wepsim::testing
