#include "wepsim/core.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wepsim {

std::string_view to_string(ProtocolKind p) {
    switch (p) {
        case ProtocolKind::Wep: return "WEP";
        case ProtocolKind::Leach: return "LEACH";
        case ProtocolKind::Sep: return "SEP";
        case ProtocolKind::Pegasis: return "PEGASIS";
        case ProtocolKind::Direct: return "DIRECT";
    }
    return "?";
}

ProtocolKind parse_protocol(std::string_view name) {
    std::string up(name);
    for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up == "WEP") return ProtocolKind::Wep;
    if (up == "LEACH") return ProtocolKind::Leach;
    if (up == "SEP") return ProtocolKind::Sep;
    if (up == "PEGASIS") return ProtocolKind::Pegasis;
    if (up == "DIRECT") return ProtocolKind::Direct;
    throw std::invalid_argument("unknown protocol name '" + std::string(name) + "'");
}

SimConfig default_config() { return SimConfig{}; }

int advanced_count(const SimConfig& cfg) {
    // llround is half-away-from-zero, i.e. ties up for m >= 0
    return static_cast<int>(std::llround(cfg.hetero.m * static_cast<double>(cfg.n)));
}

std::vector<std::string> config_errors(const SimConfig& cfg) {
    std::vector<std::string> errs;
    auto fail = [&errs](const std::string& msg) { errs.push_back(msg); };

    if (cfg.n < 1) fail("n = " + std::to_string(cfg.n) + ": at least one node required");
    if (cfg.max_rounds < 1) fail("max_rounds must be >= 1");
    if (!(cfg.p_opt > 0.0 && cfg.p_opt < 1.0))
        fail("p_opt out of range (need 0 < p_opt < 1)");
    if (!(cfg.hetero.e0 > 0.0)) fail("non-positive energy: e0 must be > 0");
    if (!(cfg.hetero.m >= 0.0 && cfg.hetero.m <= 1.0)) fail("m must lie in [0, 1]");
    if (!(cfg.hetero.alpha >= 0.0)) fail("alpha must be >= 0");
    if (!(cfg.radio.e_elec > 0.0)) fail("radio.e_elec must be > 0");
    if (!(cfg.radio.eps_amp > 0.0)) fail("radio.eps_amp must be > 0");
    if (!(cfg.radio.e_da > 0.0)) fail("radio.e_da must be > 0");
    if (cfg.radio.packet_bits <= 0) fail("radio.packet_bits must be > 0");
    if (!(cfg.field.width > 0.0 && cfg.field.height > 0.0))
        fail("field dimensions must be > 0");

    const bool weighted =
        cfg.protocol == ProtocolKind::Wep || cfg.protocol == ProtocolKind::Sep;
    if (weighted && cfg.p_opt > 0.0 && cfg.p_opt < 1.0 && cfg.hetero.alpha >= 0.0 &&
        cfg.hetero.m >= 0.0) {
        const double p_adv =
            cfg.p_opt * (1.0 + cfg.hetero.alpha) / (1.0 + cfg.hetero.alpha * cfg.hetero.m);
        if (p_adv >= 1.0)
            fail("weighted election degenerates: p_adv = " + std::to_string(p_adv) +
                 " >= 1 for this (p_opt, m, alpha)");
    }
    return errs;
}

SimConfig validate_config(const SimConfig& cfg) {
    const auto errs = config_errors(cfg);
    if (errs.empty()) return cfg;
    std::ostringstream msg;
    msg << "invalid config:";
    for (const auto& e : errs) msg << ' ' << e << ';';
    throw std::invalid_argument(msg.str());
}

double total_initial_energy(const SimConfig& cfg) {
    const int adv = advanced_count(cfg);
    const double e_adv = cfg.hetero.e0 * (1.0 + cfg.hetero.alpha);
    // class-grouped sum in extended precision: bitwise equal to adding the
    // instantiated nodes one by one for any class interleaving
    const long double total = static_cast<long double>(cfg.n - adv) * cfg.hetero.e0 +
                              static_cast<long double>(adv) * e_adv;
    return static_cast<double>(total);
}

RoundStats to_stats(const RoundLog& log) {
    RoundStats s;
    s.round = log.round;
    s.alive_before = log.alive_before;
    s.alive_after = log.alive_after;
    s.energy_consumed_j = log.energy_consumed_j;
    s.residual_total_j = log.residual_total_j;
    s.ch_count = static_cast<int>(log.ch_ids.size());
    s.bs_tx_count = log.bs_tx_count;
    s.chain_hops = log.chain_hops;
    return s;
}

}  // namespace wepsim
