#ifndef NEHARI_COULOMB_HPP
#define NEHARI_COULOMB_HPP

#include "nehari/grid.hpp"

namespace nehari {

/// Newton-kernel potential of a radial charge density.
///
/// phi(r) = kappa * 4*pi * [ (1/r) int_0^r rho(s) s^2 ds + int_r^inf rho(s) s ds ],
/// i.e. the convolution of rho with kappa/|x-y|.  kappa is the kernel
/// prefactor, normally 1 or 1/(4*pi); both conventions are in circulation and
/// every caller states which one it uses.
struct CoulombField {
  RadialFn phi;
  double total_charge = 0.0;  // Q = int rho dx
  double kappa = 1.0;
};

/// O(n) prefix-sum evaluation of the potential at the grid nodes:
///   phi_i = kappa * 4*pi * sum_j w_j rho_j / max(r_i, r_j).
/// The far field is exact: phi(r_max) * r_max == kappa * Q, and phi is
/// nonincreasing for rho >= 0.  Rejects densities with samples below -1e-14.
CoulombField newton_potential(const RadialGrid& grid, const std::vector<double>& rho,
                              double kappa);

/// Symmetric bilinear Coulomb form
///   B(rho, sigma) = kappa * (4*pi)^2 sum_{i,j} w_i w_j rho_i sigma_j / max(r_i, r_j)
/// (== int phi_rho sigma dx).  Positive semidefinite, O(n).
double hartree_bilinear(const RadialGrid& grid, const std::vector<double>& rho,
                        const std::vector<double>& sigma, double kappa);

/// int phi_{u,v} (u^2 + v^2) dx with rho = u^2 + v^2; always >= 0.
double hartree_energy(const VecPair& pair, double kappa);

/// Exact interaction kappa * Q_i * Q_j / d of two spherically symmetric
/// clusters with disjoint supports whose centers are d apart.
double disjoint_interaction(double q_i, double q_j, double d, double kappa);

/// Slack of the vector Poisson-energy inequality at parameter a > 0:
///   a * int |grad u|^2 + (pi*kappa/a) * int phi rho  -  4*pi*kappa * int rho |u|
/// with rho = u^2 + v^2.  Nonnegative in the continuum for every a; the
/// component argument selects |u| (0) or |v| (1).
double lions_gap(const VecPair& pair, double a, double kappa, int component);

}  // namespace nehari

#endif
