#pragma once

#include "sprime/lattice.hpp"

#include <cstdint>

namespace sprime {

/// k^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t k, unsigned e);

/// Whether the order-n mask vanishes at m, i.e. m = 2^k e_1 + j e_i for some k >= 0,
/// axis i, and 0 <= j <= k^(n+1). Decided exactly by checking the O(log |m_1|) candidate k.
bool pattern_mask_vanishes(unsigned n, Coords m);

}  // namespace sprime
