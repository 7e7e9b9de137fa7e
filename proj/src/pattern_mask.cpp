#include "sprime/pattern_mask.hpp"

#include <limits>

namespace sprime {

std::uint64_t saturating_pow(std::uint64_t k, unsigned e) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (k != 0 && r > kMax / k) return kMax;
        r *= k;
    }
    return r;
}

bool pattern_mask_vanishes(unsigned n, Coords m) {
    if (m.empty() || m[0] < 1) return false;
    const auto head = static_cast<std::uint64_t>(m[0]);

    std::size_t other_axis = 0;
    std::size_t nonzero_others = 0;
    for (std::size_t t = 1; t < m.size(); ++t) {
        if (m[t] != 0) {
            other_axis = t;
            ++nonzero_others;
        }
    }
    if (nonzero_others > 1) return false;

    if (nonzero_others == 0) {
        // Along e_1: head in [2^k, 2^k + k^(n+1)] for some k.
        for (unsigned k = 0; k < 63 && (std::uint64_t{1} << k) <= head; ++k) {
            if (head - (std::uint64_t{1} << k) <= saturating_pow(k, n + 1)) return true;
        }
        return false;
    }

    // Along e_i, i != 1: head = 2^k exactly and 1 <= m_i <= k^(n+1).
    const auto j = m[other_axis];
    if (j < 1 || (head & (head - 1)) != 0) return false;
    unsigned k = 0;
    while ((std::uint64_t{1} << k) != head) ++k;
    return static_cast<std::uint64_t>(j) <= saturating_pow(k, n + 1);
}

}  // namespace sprime
