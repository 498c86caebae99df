#pragma once

#include <cmath>

#include "wepsim/core.hpp"

namespace wepsim {

inline double squared_distance(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double distance(Point a, Point b) {
    return std::sqrt(squared_distance(a, b));
}

/// Transmit k bits over d meters: electronics plus the d^2 amplifier term.
inline double tx_cost(const RadioParams& radio, double k, double d) {
    return radio.e_elec * k + radio.eps_amp * k * d * d;
}

/// Receive k bits: electronics only.
inline double rx_cost(const RadioParams& radio, double k) {
    return radio.e_elec * k;
}

/// Fuse `signals` incoming signals of k bits each into one packet.
inline double agg_cost(const RadioParams& radio, double k, int signals) {
    return radio.e_da * k * static_cast<double>(signals);
}

}  // namespace wepsim
