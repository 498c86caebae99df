#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wepsim {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class NodeClass { Normal, Advanced };

enum class ProtocolKind { Wep, Leach, Sep, Pegasis, Direct };

std::string_view to_string(ProtocolKind p);

/// Case-insensitive; throws std::invalid_argument naming the bad token.
ProtocolKind parse_protocol(std::string_view name);

/// One sensor node. Ids are dense 0..n-1 and double as indices everywhere.
struct Node {
    int id = 0;
    Point pos{};
    NodeClass cls = NodeClass::Normal;
    double energy = 0.0;            // residual, joules
    double initial_energy = 0.0;    // e0 for normal, e0*(1+alpha) for advanced
    bool alive = true;
    bool elected_in_epoch = false;  // served as CH in the current class window
};

struct FieldSize {
    double width = 100.0;
    double height = 100.0;
};

/// Two-tier energy heterogeneity: a fraction m of the nodes starts with
/// alpha times extra energy.
struct HeterogeneityConfig {
    double m = 0.2;
    double alpha = 3.0;
    double e0 = 0.1;  // normal-node initial energy, joules
};

/// First-order radio constants. Transmitting k bits over d meters costs
/// e_elec*k + eps_amp*k*d^2, receiving costs e_elec*k, and fusing costs
/// e_da*k per input signal.
struct RadioParams {
    double e_elec = 50e-9;     // J/bit
    double eps_amp = 100e-12;  // J/bit/m^2
    double e_da = 5e-9;        // J/bit/signal
    int packet_bits = 4000;
};

struct SimConfig {
    int n = 100;
    FieldSize field{};
    Point bs{50.0, 50.0};  // may lie inside or outside the field
    HeterogeneityConfig hetero{};
    RadioParams radio{};
    double p_opt = 0.1;
    ProtocolKind protocol = ProtocolKind::Wep;
    int max_rounds = 10000;
    std::uint64_t seed = 1;
};

/// The built-in 100-node reference scenario (100x100 field, BS at the center,
/// m=0.2, alpha=3, 4000-bit packets).
SimConfig default_config();

/// Number of advanced nodes: m*n rounded to nearest, ties up.
int advanced_count(const SimConfig& cfg);

/// Every violated invariant as its own message. Empty means valid.
std::vector<std::string> config_errors(const SimConfig& cfg);

/// Returns cfg unchanged when valid, otherwise throws std::invalid_argument
/// listing all violations.
SimConfig validate_config(const SimConfig& cfg);

/// Exact class-grouped sum (n-k)*e0 + k*e0*(1+alpha) with k the rounded
/// advanced count. Accumulated in extended precision so it equals the
/// node-by-node sum bit for bit.
double total_initial_energy(const SimConfig& cfg);

/// Everything one protocol round did.
struct RoundLog {
    int round = 0;  // 1-based
    int alive_before = 0;
    int alive_after = 0;
    double energy_consumed_j = 0.0;
    double residual_total_j = 0.0;  // raw node residual sum after debits
    std::vector<int> ch_ids;                      // ascending node ids
    std::vector<std::pair<int, int>> cluster_of;  // member id -> head id
    std::vector<int> chain;                       // relay order, permutation of ch_ids
    std::optional<int> leader;                    // node owning the BS uplink
    int bs_tx_count = 0;
    int chain_hops = 0;
};

/// Compact per-round scalars retained for whole runs; full RoundLogs are
/// opt-in because long batches would not fit in memory otherwise.
struct RoundStats {
    int round = 0;
    int alive_before = 0;
    int alive_after = 0;
    double energy_consumed_j = 0.0;
    double residual_total_j = 0.0;
    int ch_count = 0;
    int bs_tx_count = 0;
    int chain_hops = 0;

    bool operator==(const RoundStats&) const = default;
};

RoundStats to_stats(const RoundLog& log);

}  // namespace wepsim
