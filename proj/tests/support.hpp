#ifndef NEHARI_TESTS_SUPPORT_HPP
#define NEHARI_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>

#include "nehari/grid.hpp"
#include "nehari/sampling.hpp"

namespace nehari::test {

// The production layout: log-spaced nodes resolve both the origin and the
// exponential tails.
inline const RadialGrid& default_grid() {
  static const RadialGrid grid = make_grid(4096, 30.0, GridScheme::Log);
  return grid;
}

inline const RadialGrid& small_grid() {
  static const RadialGrid grid = make_grid(1024, 30.0, GridScheme::Log);
  return grid;
}

inline RadialFn gaussian(const RadialGrid& grid, double alpha = 0.5, double amp = 1.0) {
  RadialFn u(grid);
  for (std::size_t i = 0; i < grid.n; ++i)
    u.values[i] = amp * std::exp(-alpha * grid.nodes[i] * grid.nodes[i]);
  return u;
}

inline double rel_err(double value, double target) {
  return std::abs(value - target) / std::abs(target);
}

}  // namespace nehari::test

#endif
