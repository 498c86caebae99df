#pragma once

#include <cstdint>
#include <random>

namespace wepsim {

/// Uniform randomness behind the simulator. A run owns exactly one source and
/// every stochastic choice (placement, class draw, election draws, leader
/// pick) consumes it in a fixed documented order; that ordering is the whole
/// reproducibility contract. Tests substitute scripted sources.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform double in [0, 1).
    virtual double next_unit() = 0;

    /// Uniform integer in [0, bound). bound >= 1.
    virtual std::size_t next_index(std::size_t bound) = 0;
};

class Mt64Source final : public RandomSource {
public:
    explicit Mt64Source(std::uint64_t seed) : engine_(seed) {}

    double next_unit() override {
        // top 53 bits -> [0,1); avoids distribution objects so the stream is
        // stable across standard-library versions
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::size_t next_index(std::size_t bound) override;

private:
    std::mt19937_64 engine_;
};

}  // namespace wepsim
