#pragma once

#include <vector>

#include "wepsim/clustering.hpp"
#include "wepsim/core.hpp"
#include "wepsim/election.hpp"
#include "wepsim/random.hpp"

namespace wepsim {

/// Mutable per-run network. positions[i] caches nodes[i].pos (placement is
/// fixed after init).
struct NetworkState {
    std::vector<Node> nodes;
    std::vector<Point> positions;
    ElectionProbabilities probs{};  // per-class CH probabilities for the run's protocol

    int alive_count() const;
    double residual_total() const;  // raw sum, dead-node overshoot included
};

/// Class probabilities the protocol elects with: weighted for WEP/SEP, flat
/// p_opt for LEACH (PEGASIS/DIRECT never elect).
ElectionProbabilities probabilities_for(const SimConfig& cfg);

/// Subtracts joules and marks the node dead once energy <= 0. The overshoot
/// stays on the node and is never debited again; debiting an already-dead
/// node throws std::logic_error.
void apply_debit(Node& node, double joules);

/// One protocol round: election (clustered protocols), cluster assignment,
/// intra-cluster collection, delivery to the BS, then death marking after all
/// debits. `round` is 1-based. A round with zero elected CHs falls back to
/// direct-to-BS transmission for every alive node.
RoundLog run_round(NetworkState& state, const SimConfig& cfg, int round,
                   RandomSource& rng);

}  // namespace wepsim
