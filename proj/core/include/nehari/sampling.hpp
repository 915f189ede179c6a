#ifndef NEHARI_SAMPLING_HPP
#define NEHARI_SAMPLING_HPP

#include <random>

#include "nehari/grid.hpp"

namespace nehari {

/// Smooth decaying random profile: a short sum of Gaussian bumps with
/// amplitudes in [lo, hi], widths in [0.3, 3] and centers in [0, 3].
RadialFn random_profile(const RadialGrid& grid, std::mt19937_64& rng, double lo = 0.2,
                        double hi = 1.0);

/// Component-wise random pair; signed = true allows negative amplitudes.
VecPair random_pair(const RadialGrid& grid, std::mt19937_64& rng, bool signed_amplitudes = false);

}  // namespace nehari

#endif
