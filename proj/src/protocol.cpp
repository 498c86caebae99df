#include "wepsim/protocol.hpp"

#include <stdexcept>

#include "wepsim/radio.hpp"

namespace wepsim {

int NetworkState::alive_count() const {
    int n = 0;
    for (const auto& nd : nodes) n += nd.alive ? 1 : 0;
    return n;
}

double NetworkState::residual_total() const {
    double total = 0.0;
    for (const auto& nd : nodes) total += nd.energy;
    return total;
}

ElectionProbabilities probabilities_for(const SimConfig& cfg) {
    switch (cfg.protocol) {
        case ProtocolKind::Wep:
        case ProtocolKind::Sep:
            return weighted_probabilities(cfg.p_opt, cfg.hetero.m, cfg.hetero.alpha);
        default:
            return {cfg.p_opt, cfg.p_opt};
    }
}

void apply_debit(Node& node, double joules) {
    if (!node.alive) throw std::logic_error("apply_debit: node is already dead");
    if (joules < 0.0) throw std::logic_error("apply_debit: negative debit");
    node.energy -= joules;
    if (node.energy <= 0.0) node.alive = false;
}

namespace {

void direct_to_bs(const NetworkState& state, const SimConfig& cfg,
                  std::vector<double>& cost, RoundLog& log) {
    const double k = cfg.radio.packet_bits;
    int uplinks = 0;
    for (const auto& nd : state.nodes) {
        if (!nd.alive) continue;
        cost[nd.id] += tx_cost(cfg.radio, k, distance(nd.pos, cfg.bs));
        ++uplinks;
    }
    log.bs_tx_count = uplinks;
}

void clustered_round(NetworkState& state, const SimConfig& cfg, int round0,
                     RandomSource& rng, std::vector<double>& cost, RoundLog& log) {
    const double k = cfg.radio.packet_bits;

    log.ch_ids = elect_cluster_heads(state.nodes, state.probs, round0, rng);
    if (log.ch_ids.empty()) {
        // no CH this round: everyone reports straight to the BS rather than
        // freezing the round
        direct_to_bs(state, cfg, cost, log);
        return;
    }

    log.cluster_of = assign_clusters(state.nodes, log.ch_ids);

    // TDMA collection: member uplink, head rx per member, fusion over
    // members + the head's own signal
    std::vector<int> member_count(state.nodes.size(), 0);
    for (const auto& [member, head] : log.cluster_of) {
        cost[member] += tx_cost(cfg.radio, k,
                                distance(state.positions[member], state.positions[head]));
        cost[head] += rx_cost(cfg.radio, k);
        ++member_count[head];
    }
    for (int head : log.ch_ids)
        cost[head] += agg_cost(cfg.radio, k, member_count[head] + 1);

    if (cfg.protocol == ProtocolKind::Wep) {
        log.chain = build_greedy_chain(log.ch_ids, state.positions, cfg.bs);
        const std::size_t leader_pos = select_leader(log.chain, rng);
        log.leader = log.chain[leader_pos];
        const auto relay =
            chain_relay_cost(log.chain, leader_pos, state.positions, cfg.bs, cfg.radio);
        for (const auto& [id, c] : relay.per_node) cost[id] += c;
        log.bs_tx_count = 1;
        log.chain_hops = static_cast<int>(log.chain.size()) - 1;
    } else {
        // LEACH / SEP: every head uplinks on its own
        for (int head : log.ch_ids)
            cost[head] += tx_cost(cfg.radio, k, distance(state.positions[head], cfg.bs));
        log.bs_tx_count = static_cast<int>(log.ch_ids.size());
    }
}

void pegasis_round(NetworkState& state, const SimConfig& cfg, int round,
                   std::vector<double>& cost, RoundLog& log) {
    std::vector<int> alive_ids;
    for (const auto& nd : state.nodes)
        if (nd.alive) alive_ids.push_back(nd.id);

    log.ch_ids = alive_ids;  // every chain member forwards its own data
    log.chain = build_greedy_chain(alive_ids, state.positions, cfg.bs);
    // uplink duty cycles deterministically through the chain
    const std::size_t leader_pos = static_cast<std::size_t>(round) % log.chain.size();
    log.leader = log.chain[leader_pos];

    const auto relay =
        chain_relay_cost(log.chain, leader_pos, state.positions, cfg.bs, cfg.radio);
    for (const auto& [id, c] : relay.per_node) cost[id] += c;
    log.bs_tx_count = 1;
    log.chain_hops = static_cast<int>(log.chain.size()) - 1;
}

}  // namespace

RoundLog run_round(NetworkState& state, const SimConfig& cfg, int round,
                   RandomSource& rng) {
    RoundLog log;
    log.round = round;
    log.alive_before = state.alive_count();
    if (log.alive_before == 0) throw std::logic_error("run_round: no node alive");

    std::vector<double> cost(state.nodes.size(), 0.0);

    switch (cfg.protocol) {
        case ProtocolKind::Direct:
            direct_to_bs(state, cfg, cost, log);
            break;
        case ProtocolKind::Pegasis:
            pegasis_round(state, cfg, round, cost, log);
            break;
        default:
            clustered_round(state, cfg, round - 1, rng, cost, log);
            break;
    }

    // all debits land after the phases: a node spending its last joules still
    // delivers this round's packet
    double consumed = 0.0;
    for (auto& nd : state.nodes) {
        if (!nd.alive || cost[nd.id] == 0.0) continue;
        consumed += cost[nd.id];
        apply_debit(nd, cost[nd.id]);
    }

    log.energy_consumed_j = consumed;
    log.alive_after = state.alive_count();
    log.residual_total_j = state.residual_total();
    return log;
}

}  // namespace wepsim
