#include "wepsim/election.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wepsim {

ElectionProbabilities weighted_probabilities(double p_opt, double m, double alpha) {
    if (!(p_opt > 0.0 && p_opt < 1.0))
        throw std::invalid_argument("p_opt out of range (need 0 < p_opt < 1)");
    if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument("m must lie in [0, 1]");
    if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");

    const double denom = 1.0 + alpha * m;
    ElectionProbabilities p;
    p.p_nrm = p_opt / denom;
    p.p_adv = p_opt * (1.0 + alpha) / denom;
    if (p.p_adv >= 1.0)
        throw std::invalid_argument("weighted election degenerates: p_adv = " +
                                    std::to_string(p.p_adv) + " >= 1");
    return p;
}

int eligibility_window(double p) {
    const auto w = std::llround(1.0 / p);
    return w < 1 ? 1 : static_cast<int>(w);
}

EpochInfo epoch_length(double p_opt, double m, double alpha) {
    const auto probs = weighted_probabilities(p_opt, m, alpha);
    EpochInfo info;
    info.system_epoch = static_cast<int>(std::llround((1.0 + alpha * m) / p_opt));
    info.normal_window = eligibility_window(probs.p_nrm);
    info.advanced_window = eligibility_window(probs.p_adv);
    return info;
}

double election_threshold(double p, int round0, bool in_pool) {
    if (!in_pool) return 0.0;
    const int window = eligibility_window(p);
    const int phase = round0 % window;
    return p / (1.0 - p * static_cast<double>(phase));
}

std::vector<int> elect_cluster_heads(std::span<Node> nodes,
                                     const ElectionProbabilities& probs,
                                     int round0, RandomSource& rng) {
    const int window_nrm = eligibility_window(probs.p_nrm);
    const int window_adv = eligibility_window(probs.p_adv);

    // pool resets happen before any draw of this round
    for (auto& nd : nodes) {
        if (!nd.alive) continue;
        const int window = nd.cls == NodeClass::Normal ? window_nrm : window_adv;
        if (round0 % window == 0) nd.elected_in_epoch = false;
    }

    std::vector<int> heads;
    for (auto& nd : nodes) {
        if (!nd.alive || nd.elected_in_epoch) continue;  // no draw outside the pool
        const double p = nd.cls == NodeClass::Normal ? probs.p_nrm : probs.p_adv;
        const double u = rng.next_unit();
        if (u < election_threshold(p, round0, true)) {
            heads.push_back(nd.id);
            nd.elected_in_epoch = true;
        }
    }
    return heads;
}

}  // namespace wepsim
