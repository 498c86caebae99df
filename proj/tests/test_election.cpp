#include <vector>

#include "doctest.h"
#include "wepsim/election.hpp"
#include "wepsim/random.hpp"

#include "support/epoch_oracle.hpp"
#include "support/test_rng.hpp"

using namespace wepsim;
using wepsim::testing::ScriptedSource;

namespace {

std::vector<Node> homogeneous_nodes(int n) {
    std::vector<Node> nodes(n);
    for (int i = 0; i < n; ++i) {
        nodes[i].id = i;
        nodes[i].energy = nodes[i].initial_energy = 0.1;
    }
    return nodes;
}

}  // namespace

TEST_CASE("weighted probabilities") {
    SUBCASE("reference heterogeneity") {
        const auto p = weighted_probabilities(0.1, 0.2, 3.0);
        CHECK(p.p_nrm == doctest::Approx(0.0625).epsilon(1e-12));
        CHECK(p.p_adv == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(0.8 * p.p_nrm + 0.2 * p.p_adv == doctest::Approx(0.1).epsilon(1e-13));
    }
    SUBCASE("alpha = 0 collapses to the homogeneous probability") {
        const auto p = weighted_probabilities(0.1, 0.2, 0.0);
        CHECK(p.p_nrm == 0.1);
        CHECK(p.p_adv == 0.1);
    }
    SUBCASE("hand-evaluated small case") {
        const auto p = weighted_probabilities(0.05, 0.1, 1.0);
        CHECK(p.p_nrm == doctest::Approx(0.045455).epsilon(1e-6));
        CHECK(p.p_adv == doctest::Approx(0.090909).epsilon(1e-6));
    }
    SUBCASE("degenerate parameters are rejected") {
        CHECK_THROWS_AS(weighted_probabilities(0.5, 0.2, 3.0), std::invalid_argument);
        CHECK_THROWS_AS(weighted_probabilities(0.0, 0.2, 3.0), std::invalid_argument);
    }
}

TEST_CASE("population average is preserved across the parameter space") {
    Mt64Source rng(42);
    int checked = 0;
    while (checked < 1000) {
        const double p_opt = 0.01 + rng.next_unit() * 0.49;
        const double m = rng.next_unit();
        const double alpha = rng.next_unit() * 5.0;
        if (p_opt * (1.0 + alpha) / (1.0 + alpha * m) >= 1.0) continue;
        const auto p = weighted_probabilities(p_opt, m, alpha);
        CHECK(std::abs((1.0 - m) * p.p_nrm + m * p.p_adv - p_opt) <= 1e-12);
        ++checked;
    }
}

TEST_CASE("epoch lengths") {
    SUBCASE("reference heterogeneity stretches the epoch to 16") {
        const auto e = epoch_length(0.1, 0.2, 3.0);
        CHECK(e.system_epoch == 16);
        CHECK(e.normal_window == 16);
        CHECK(e.advanced_window == 4);
    }
    SUBCASE("homogeneous epoch is 1/p_opt") {
        CHECK(epoch_length(0.1, 0.0, 2.0).system_epoch == 10);
    }
    SUBCASE("hand-evaluated case") {
        CHECK(epoch_length(0.05, 0.2, 4.0).system_epoch == 36);
    }
}

TEST_CASE("election threshold") {
    CHECK(election_threshold(0.25, 5, false) == 0.0);
    CHECK(election_threshold(0.25, 0, true) == 0.25);
    // 0.0625 / (1 - 0.0625*8)
    CHECK(election_threshold(0.0625, 8, true) == doctest::Approx(0.125).epsilon(1e-15));

    SUBCASE("denominator stays positive over whole windows") {
        Mt64Source rng(3);
        for (int i = 0; i < 200; ++i) {
            const double p = 0.01 + rng.next_unit() * 0.95;
            for (int r = 0; r < 3 * eligibility_window(p); ++r) {
                const double t = election_threshold(p, r, true);
                CHECK(t > 0.0);
                CHECK(std::isfinite(t));
            }
        }
    }
}

TEST_CASE("electing cluster heads") {
    const ElectionProbabilities probs{0.25, 0.25};

    SUBCASE("dead network elects nobody and consumes no draws") {
        auto nodes = homogeneous_nodes(4);
        for (auto& nd : nodes) nd.alive = false;
        ScriptedSource rng;  // throws on any consumption
        CHECK(elect_cluster_heads(nodes, probs, 0, rng).empty());
    }
    SUBCASE("a minimal draw elects the only eligible node") {
        auto nodes = homogeneous_nodes(1);
        ScriptedSource rng;
        rng.units = {0.0};
        const auto heads = elect_cluster_heads(nodes, probs, 0, rng);
        CHECK(heads == std::vector<int>{0});
        CHECK(nodes[0].elected_in_epoch);
    }
    SUBCASE("elected nodes leave the pool until it resets") {
        auto nodes = homogeneous_nodes(2);
        ScriptedSource rng;
        rng.units = {0.0, 0.9};  // round 0: node 0 elected, node 1 not
        CHECK(elect_cluster_heads(nodes, probs, 0, rng) == std::vector<int>{0});
        rng.units = {0.9};  // round 1: only node 1 draws
        CHECK(elect_cluster_heads(nodes, probs, 1, rng).empty());
        rng.units = {0.0, 0.0};  // round 4 resets the pool, both draw again
        CHECK(elect_cluster_heads(nodes, probs, 4, rng) == std::vector<int>{0, 1});
    }
}

TEST_CASE("every alive node is elected exactly once per epoch (exhaustive)") {
    SUBCASE("four alive nodes") {
        const auto result = wepsim::testing::enumerate_epoch_paths(
            homogeneous_nodes(4), 0.25, [](const std::string& msg) { FAIL_CHECK(msg); });
        CHECK(result.violations == 0);
        CHECK(result.paths > 0);
    }
    SUBCASE("a dead node never participates") {
        auto nodes = homogeneous_nodes(4);
        nodes[2].alive = false;
        const auto result = wepsim::testing::enumerate_epoch_paths(
            nodes, 0.25, [](const std::string& msg) { FAIL_CHECK(msg); });
        CHECK(result.violations == 0);
    }
}

TEST_CASE("heterogeneous pools never elect a node twice inside its window") {
    const auto probs = weighted_probabilities(0.1, 0.2, 3.0);
    std::vector<Node> nodes = homogeneous_nodes(50);
    for (int i = 0; i < 10; ++i) nodes[i * 5].cls = NodeClass::Advanced;

    Mt64Source rng(11);
    std::vector<int> last_elected(nodes.size(), -1000);
    for (int round0 = 0; round0 < 200; ++round0) {
        const auto heads = elect_cluster_heads(nodes, probs, round0, rng);
        for (int id : heads) {
            const int window = nodes[id].cls == NodeClass::Normal
                                   ? eligibility_window(probs.p_nrm)
                                   : eligibility_window(probs.p_adv);
            // a repeat inside the same window would violate pool exclusion
            CHECK(round0 / window > last_elected[id] / window);
            last_elected[id] = round0;
        }
    }
}

TEST_CASE("flat weighting makes WEP/SEP election identical in law to LEACH") {
    // equal thresholds at every round...
    const auto weighted = weighted_probabilities(0.2, 0.0, 0.0);
    for (int r = 0; r < 30; ++r) {
        CHECK(election_threshold(weighted.p_nrm, r, true) ==
              election_threshold(0.2, r, true));
        CHECK(election_threshold(weighted.p_adv, r, true) ==
              election_threshold(0.2, r, true));
    }
    // ...and identical CH sets when fed the same draws
    auto a = homogeneous_nodes(10);
    auto b = a;
    for (int r = 0; r < 12; ++r) {
        ScriptedSource rng_a, rng_b;
        Mt64Source shared(500 + r);
        for (int i = 0; i < 10; ++i) {
            const double u = shared.next_unit();
            rng_a.units.push_back(u);
            rng_b.units.push_back(u);
        }
        const auto heads_a = elect_cluster_heads(a, weighted, r, rng_a);
        const auto heads_b = elect_cluster_heads(b, {0.2, 0.2}, r, rng_b);
        CHECK(heads_a == heads_b);
    }
}
