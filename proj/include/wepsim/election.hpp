#pragma once

#include <span>
#include <vector>

#include "wepsim/core.hpp"
#include "wepsim/random.hpp"

namespace wepsim {

/// Per-class CH probabilities. Weighting preserves the population average:
/// (1-m)*p_nrm + m*p_adv == p_opt.
struct ElectionProbabilities {
    double p_nrm = 0.0;
    double p_adv = 0.0;
};

/// Class weights are initial energy relative to a normal node, so
/// p_nrm = p_opt/(1+alpha*m) and p_adv = p_opt*(1+alpha)/(1+alpha*m).
/// Throws std::invalid_argument when p_adv would reach 1 (the election
/// degenerates) or when the inputs are out of range.
ElectionProbabilities weighted_probabilities(double p_opt, double m, double alpha);

struct EpochInfo {
    int system_epoch = 0;     // rounds until every node has served as CH once
    int normal_window = 0;    // pool-reset period for normal nodes
    int advanced_window = 0;  // pool-reset period for advanced nodes
};

/// System epoch (1/p_opt)*(1+alpha*m) plus the per-class eligibility windows,
/// all rounded to the nearest round.
EpochInfo epoch_length(double p_opt, double m, double alpha);

/// Pool-reset period for one class: round(1/p), at least 1.
int eligibility_window(double p);

/// Election threshold T = p / (1 - p*(round0 mod round(1/p))) for pool
/// members, 0 otherwise. round0 is 0-based; the denominator stays positive
/// for every 0 < p < 1.
double election_threshold(double p, int round0, bool in_pool);

/// One election pass in ascending id order: a class pool resets whenever
/// round0 hits a multiple of that class's window, then every alive pool
/// member draws u and becomes CH iff u < its threshold. Only pool members
/// consume the rng, so the stream stays aligned for a given network history.
/// An empty result is legal (handled by the round fallback).
std::vector<int> elect_cluster_heads(std::span<Node> nodes,
                                     const ElectionProbabilities& probs,
                                     int round0, RandomSource& rng);

}  // namespace wepsim
