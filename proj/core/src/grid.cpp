#include "nehari/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nehari {

namespace {

constexpr double kLogInnerFraction = 1e-4;  // r_1 / r_max for the log scheme

// Adds to w[k0..k0+2] the exact integrals of the quadratic Lagrange basis on
// nodes (x0,x1,x2) against the r^2 Jacobian over [a,b].
void add_quadratic_chunk(std::vector<double>& w, std::size_t k0, double x0,
                         double x1, double x2, double a, double b) {
  const double m2 = (b * b * b - a * a * a) / 3.0;
  const double b4 = b * b * b * b, a4 = a * a * a * a;
  const double m3 = (b4 - a4) / 4.0;
  const double m4 = (b4 * b - a4 * a) / 5.0;
  const double xs[3] = {x0, x1, x2};
  for (int k = 0; k < 3; ++k) {
    const double xi = xs[(k + 1) % 3], xj = xs[(k + 2) % 3];
    const double denom = (xs[k] - xi) * (xs[k] - xj);
    w[k0 + static_cast<std::size_t>(k)] += (m4 - (xi + xj) * m3 + xi * xj * m2) / denom;
  }
}

}  // namespace

RadialGrid make_grid(std::size_t n, double r_max, GridScheme scheme) {
  if (n < 64) throw std::invalid_argument("make_grid: node count must be >= 64");
  if (!(r_max > 0.0)) throw std::invalid_argument("make_grid: r_max must be positive");

  RadialGrid g;
  g.n = n;
  g.r_max = r_max;
  g.scheme = scheme;
  g.nodes.resize(n);
  if (scheme == GridScheme::Uniform) {
    for (std::size_t i = 0; i < n; ++i)
      g.nodes[i] = r_max * static_cast<double>(i + 1) / static_cast<double>(n);
  } else {
    const double span = -std::log(kLogInnerFraction);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(n - 1 - i) / static_cast<double>(n - 1);
      g.nodes[i] = r_max * std::exp(-span * t);
    }
    g.nodes[n - 1] = r_max;
  }

  // Weights: quadratic extrapolation over [0, r_1], then Simpson-type pairs of
  // segments, then (if the segment count is odd) a trailing quadratic piece.
  g.weights.assign(n, 0.0);
  // Quadratic extrapolation over [0, r_1] only where the three-node stencil
  // spans a decent fraction of it (always on uniform grids); on strongly
  // clustered grids the extrapolation is ill-conditioned and the segment is
  // so short relative to r_max that a constant rule is exact to ~(r_1/r_max)^3.
  if (g.nodes[2] - g.nodes[0] >= 0.5 * g.nodes[0]) {
    add_quadratic_chunk(g.weights, 0, g.nodes[0], g.nodes[1], g.nodes[2], 0.0, g.nodes[0]);
  } else {
    g.weights[0] += g.nodes[0] * g.nodes[0] * g.nodes[0] / 3.0;
  }
  // Per segment, average the exact integrals of the quadratics through the
  // left and right node triples (boundary segments have only one).  Exact for
  // piecewise-quadratic integrands, and parity-free: the weights stay close
  // to the cell volumes, so the kinetic-form gradient divided by them is also
  // a consistent three-point Laplacian.
  for (std::size_t s = 0; s + 1 < n; ++s) {
    const double a = g.nodes[s], b = g.nodes[s + 1];
    const bool has_left = s >= 1, has_right = s + 2 < n;
    const double scale = (has_left && has_right) ? 0.5 : 1.0;
    std::vector<double> part(3, 0.0);
    if (has_left) {
      part.assign(3, 0.0);
      add_quadratic_chunk(part, 0, g.nodes[s - 1], g.nodes[s], g.nodes[s + 1], a, b);
      for (int k = 0; k < 3; ++k) g.weights[s - 1 + k] += scale * part[k];
    }
    if (has_right) {
      part.assign(3, 0.0);
      add_quadratic_chunk(part, 0, g.nodes[s], g.nodes[s + 1], g.nodes[s + 2], a, b);
      for (int k = 0; k < 3; ++k) g.weights[s + k] += scale * part[k];
    }
  }

  for (std::size_t k = 0; k < n; ++k)
    if (!(g.weights[k] > 0.0))
      throw std::runtime_error("make_grid: nonpositive quadrature weight at node " +
                               std::to_string(k));
  long double sum = 0.0L;
  for (double w : g.weights) sum += w;
  const double moment = r_max * r_max * r_max / 3.0;
  if (std::abs(static_cast<double>(sum) - moment) > 1e-10 * moment)
    throw std::runtime_error("make_grid: weights fail the r^2 moment check");

  g.edge_coeff.resize(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double a = g.nodes[k], b = g.nodes[k + 1];
    const double dr = b - a;
    g.edge_coeff[k] = (b * b * b - a * a * a) / (3.0 * dr * dr);
  }
  return g;
}

double integrate(const RadialGrid& grid, const std::vector<double>& samples) {
  if (samples.size() != grid.n)
    throw std::invalid_argument("integrate: sample length does not match grid");
  long double acc = 0.0L;
  for (std::size_t k = 0; k < grid.n; ++k)
    acc += static_cast<long double>(grid.weights[k]) * samples[k];
  return 4.0 * M_PI * static_cast<double>(acc);
}

double kinetic_sq(const RadialFn& u) {
  const RadialGrid& g = *u.grid;
  long double acc = 0.0L;
  for (std::size_t k = 0; k + 1 < g.n; ++k) {
    const double du = u.values[k + 1] - u.values[k];
    acc += static_cast<long double>(g.edge_coeff[k]) * du * du;
  }
  return 4.0 * M_PI * static_cast<double>(acc);
}

double h1_norm_sq(const RadialFn& u) {
  const RadialGrid& g = *u.grid;
  long double acc = 0.0L;
  for (std::size_t k = 0; k < g.n; ++k)
    acc += static_cast<long double>(g.weights[k]) * u.values[k] * u.values[k];
  return kinetic_sq(u) + 4.0 * M_PI * static_cast<double>(acc);
}

double lp_norm_pow(const RadialFn& u, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("lp_norm_pow: exponent must be >= 1");
  const RadialGrid& g = *u.grid;
  long double acc = 0.0L;
  for (std::size_t k = 0; k < g.n; ++k)
    acc += static_cast<long double>(g.weights[k]) * std::pow(std::abs(u.values[k]), q);
  return 4.0 * M_PI * static_cast<double>(acc);
}

double strauss_ratio(const RadialFn& u) {
  const RadialGrid& g = *u.grid;
  double peak = 0.0;
  bool any = false;
  for (std::size_t k = 0; k + 1 < g.n; ++k) {
    peak = std::max(peak, g.nodes[k] * std::abs(u.values[k]));
    any = any || u.values[k] != 0.0;
  }
  if (!any && u.values.back() == 0.0)
    throw std::invalid_argument("strauss_ratio: zero profile");
  return peak / std::sqrt(h1_norm_sq(u));
}

bool nontrivial(const VecPair& pair) {
  auto has_mass = [](const RadialFn& f) {
    for (double v : f.values)
      if (v != 0.0) return true;
    return false;
  };
  return has_mass(pair.u) || has_mass(pair.v);
}

}  // namespace nehari
