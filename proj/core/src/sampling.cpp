#include "nehari/sampling.hpp"

#include <cmath>

namespace nehari {

RadialFn random_profile(const RadialGrid& grid, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> amp(lo, hi), width(0.3, 3.0), center(0.0, 3.0);
  double a[3], b[3], c[3];
  for (int k = 0; k < 3; ++k) {
    a[k] = amp(rng);
    b[k] = width(rng);
    c[k] = center(rng);
  }
  RadialFn u(grid);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double r = grid.nodes[i];
    double v = 0.0;
    for (int k = 0; k < 3; ++k) v += a[k] * std::exp(-b[k] * (r - c[k]) * (r - c[k]));
    u.values[i] = v;
  }
  u.values.back() = 0.0;
  return u;
}

VecPair random_pair(const RadialGrid& grid, std::mt19937_64& rng, bool signed_amplitudes) {
  const double lo = signed_amplitudes ? -1.0 : 0.2;
  return {random_profile(grid, rng, lo, 1.0), random_profile(grid, rng, lo, 1.0)};
}

}  // namespace nehari
