#ifndef NEHARI_ENERGY_HPP
#define NEHARI_ENERGY_HPP

#include <array>

#include "nehari/coulomb.hpp"
#include "nehari/grid.hpp"

namespace nehari {

/// Model parameters of the coupled system.  The power p lives in (2,4) for
/// the variational theory; a relaxed flag admits p up to 6 where an
/// operation is valid on the wider range.
struct ModelParams {
  double p = 2.5;
  double lambda = 1.0;
  double beta = 1.0;
  double kappa = 1.0;
};

void validate_params(const ModelParams& params, bool relaxed_p = false);

/// J split into its four integrals:
///   total = (kinetic + mass)/2 + (lambda/4)*hartree - coupling/p.
struct EnergyBreakdown {
  double kinetic = 0.0;   // int (|grad u|^2 + |grad v|^2)
  double mass = 0.0;      // int (u^2 + v^2)
  double hartree = 0.0;   // int phi_{u,v} (u^2 + v^2)
  double coupling = 0.0;  // int (|u|^p + |v|^p + 2 beta |u|^{p/2} |v|^{p/2})
  double total = 0.0;
};

/// Pointwise residual of both Euler-Lagrange equations,
///   res_u = -Lap u + u + lambda phi u - |u|^{p-2} u - beta |v|^{p/2} |u|^{p/2-2} u
/// (and symmetrically res_v), with the conservative three-point radial
/// Laplacian.  The residual is the exact gradient of the discrete energy in
/// the cell-volume inner product, so <res, d> matches directional
/// derivatives of total_energy to rounding.  norm is the L2 size of the
/// concatenated pair.
struct ResidualPair {
  RadialFn res_u;
  RadialFn res_v;
  double norm = 0.0;
};

/// Scaling-identity data at a configuration:
///   z1..z4 are the four integrals, theta the energy, and
///   poho_residual = |z1/2 + 3*z2/2 + 5*lambda*z3/4 - 3*z4/p|,
/// which vanishes (to discretization error) at solutions.
struct PohozaevData {
  double z1 = 0.0, z2 = 0.0, z3 = 0.0, z4 = 0.0;
  double theta = 0.0;
  double poho_residual = 0.0;
};

/// int (|u|^p + |v|^p + 2 beta |u|^{p/2} |v|^{p/2}) dx >= 0.
double coupling_integral(const VecPair& pair, double p, double beta);

EnergyBreakdown total_energy(const VecPair& pair, const ModelParams& params);

/// Scalar functional: J(z, 0) (beta plays no role in it).
double scalar_energy(const RadialFn& z, const ModelParams& params);

ResidualPair el_residual(const VecPair& pair, const ModelParams& params);

/// Directional derivative <J'(pair), (du,dv)> via the residual pairing.
double energy_directional(const ResidualPair& res, const VecPair& dir);

PohozaevData pohozaev(const VecPair& pair, const ModelParams& params);

/// One-parameter family solving the stationarity/scaling linear system at
/// energy theta:
///   z = (theta/(p-2)) * [3(p-2), 6-p, 0, 2p] + t * [p-2, -2(p-3), 2(p-2)/lambda, p].
std::array<double, 4> pohozaev_solution(double theta, double t, double p, double lambda);

/// Residuals of the three defining equations for given (z, theta); all zero
/// exactly on the pohozaev_solution family.
std::array<double, 3> pohozaev_system_gap(const std::array<double, 4>& z, double theta,
                                          double p, double lambda);

/// Lower bound on J from the Poisson-energy inequality at Young parameter
/// matched to (lambda, kappa):
///   J >= ||(u,v)||_H^2/4 + (lambda/8) int phi rho
///        + sum_{w in {u,v}} int ( w^2/4 + c sqrt(lambda) |w|^3 - (1+beta)/p |w|^p )
/// with c = sqrt(pi * kappa) / 2.
double coercivity_lower_bound(const VecPair& pair, const ModelParams& params);

}  // namespace nehari

#endif
