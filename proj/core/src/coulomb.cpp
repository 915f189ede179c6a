#include "nehari/coulomb.hpp"

#include <cmath>
#include <stdexcept>

namespace nehari {

namespace {

void check_density(const RadialGrid& grid, const std::vector<double>& rho) {
  if (rho.size() != grid.n)
    throw std::invalid_argument("coulomb: density length does not match grid");
  for (double v : rho)
    if (v < -1e-14)
      throw std::invalid_argument("coulomb: negative density sample");
}

// phi/(4*pi*kappa) at every node via one inward and one outward pass.
std::vector<double> reduced_potential(const RadialGrid& grid, const std::vector<double>& rho) {
  const std::size_t n = grid.n;
  std::vector<double> out(n);
  long double inner = 0.0L;  // sum_{j<=i} w_j rho_j
  for (std::size_t i = 0; i < n; ++i) {
    inner += static_cast<long double>(grid.weights[i]) * rho[i];
    out[i] = static_cast<double>(inner) / grid.nodes[i];
  }
  long double outer = 0.0L;  // sum_{j>i} w_j rho_j / r_j
  for (std::size_t i = n; i-- > 0;) {
    out[i] += static_cast<double>(outer);
    outer += static_cast<long double>(grid.weights[i]) * rho[i] / grid.nodes[i];
  }
  return out;
}

}  // namespace

CoulombField newton_potential(const RadialGrid& grid, const std::vector<double>& rho,
                              double kappa) {
  check_density(grid, rho);
  CoulombField field;
  field.kappa = kappa;
  field.total_charge = integrate(grid, rho);
  std::vector<double> phi = reduced_potential(grid, rho);
  const double scale = kappa * 4.0 * M_PI;
  for (double& v : phi) v *= scale;
  field.phi = RadialFn(grid, std::move(phi));
  return field;
}

double hartree_bilinear(const RadialGrid& grid, const std::vector<double>& rho,
                        const std::vector<double>& sigma, double kappa) {
  if (rho.size() != grid.n || sigma.size() != grid.n)
    throw std::invalid_argument("hartree_bilinear: length mismatch");
  const std::vector<double> phi = reduced_potential(grid, rho);
  long double acc = 0.0L;
  for (std::size_t i = 0; i < grid.n; ++i)
    acc += static_cast<long double>(grid.weights[i]) * sigma[i] * phi[i];
  return kappa * 16.0 * M_PI * M_PI * static_cast<double>(acc);
}

double hartree_energy(const VecPair& pair, double kappa) {
  const RadialGrid& grid = *pair.u.grid;
  std::vector<double> rho(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i)
    rho[i] = pair.u.values[i] * pair.u.values[i] + pair.v.values[i] * pair.v.values[i];
  return hartree_bilinear(grid, rho, rho, kappa);
}

double disjoint_interaction(double q_i, double q_j, double d, double kappa) {
  if (!(d > 0.0)) throw std::invalid_argument("disjoint_interaction: separation must be positive");
  return kappa * q_i * q_j / d;
}

double lions_gap(const VecPair& pair, double a, double kappa, int component) {
  if (!(a > 0.0)) throw std::invalid_argument("lions_gap: parameter a must be positive");
  const RadialGrid& grid = *pair.u.grid;
  const RadialFn& w = (component == 0) ? pair.u : pair.v;
  std::vector<double> rho(grid.n), rho_absw(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    rho[i] = pair.u.values[i] * pair.u.values[i] + pair.v.values[i] * pair.v.values[i];
    rho_absw[i] = rho[i] * std::abs(w.values[i]);
  }
  const double lhs = 4.0 * M_PI * kappa * integrate(grid, rho_absw);
  const double rhs = a * kinetic_sq(w) +
                     (M_PI * kappa / a) * hartree_bilinear(grid, rho, rho, kappa);
  return rhs - lhs;
}

}  // namespace nehari
