#include "wepsim/random.hpp"

namespace wepsim {

std::size_t Mt64Source::next_index(std::size_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t b = bound;
    // rejection keeps the draw unbiased for any bound
    const std::uint64_t reject_below = (0 - b) % b;  // 2^64 mod bound
    std::uint64_t v = engine_();
    while (v < reject_below) v = engine_();
    return static_cast<std::size_t>(v % b);
}

}  // namespace wepsim
