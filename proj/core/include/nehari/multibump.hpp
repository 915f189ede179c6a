#ifndef NEHARI_MULTIBUMP_HPP
#define NEHARI_MULTIBUMP_HPP

#include <vector>

#include "nehari/energy.hpp"
#include "nehari/fibering.hpp"
#include "nehari/grid.hpp"
#include "nehari/soliton.hpp"

namespace nehari {

/// One row of bumps: N translated copies of a truncated profile at center
/// spacing N^3 along a fixed direction.  All interactions reduce to the
/// cached single-bump integrals plus exact point-charge cross terms, since
/// disjoint spherical clusters interact like point charges.
struct BumpConfig {
  double R0 = 0.0;           // truncation radius
  int N = 1;                 // bump count
  double spacing = 0.0;      // center distance N^3
  double q = 0.0;            // per-bump charge, int u_R^2 dx
  double h1_sq = 0.0;        // ||u_R||_{H^1}^2
  double p_integral = 0.0;   // int |u_R|^p dx (coupling factor applied later)
  double hartree_self = 0.0; // int phi_{u_R} u_R^2 dx at the chosen kappa
};

/// Per-N summary of the divergence construction.
struct BumpCurve {
  double R0 = 0.0;
  double q = 0.0;
  std::vector<int> Ns;
  std::vector<double> spacing;
  std::vector<double> t2;           // larger stationary scaling per N
  std::vector<double> energies;     // J at the t2 configuration
  std::vector<double> cross_terms;  // sum of pairwise Coulomb interactions
  std::vector<double> bounds;       // (N^2-N)/(N^3-2 R0) q^2
};

/// w * psi with the C1 cubic cutoff psi = 1 on [0, R0/2], 0 on [R0, inf);
/// |psi'| <= 3/R0, so the cutoff gradient stays below 1 for every R0 >= 3.
/// Requires R0 < r_max / 2.
RadialFn truncate_profile(const RadialFn& w, double R0);

/// Builds the cached integrals for N bumps of the truncated profile.
/// Overlap (spacing <= 2 R0 with N >= 2) is rejected.
BumpConfig bump_config(const RadialFn& truncated, double R0, int N,
                       const ModelParams& params);

/// Ray coefficients of the N-bump split configuration:
///   A = N h1_sq,  B = N hartree_self + cross,  C = N g_beta(s_beta) p_integral.
FiberCoeffs bump_coeffs(const ModelParams& params, const BumpConfig& cfg);

/// Total pairwise interaction sum_{i != j} kappa q^2 / (|i-j| spacing).
double bump_cross_term(const BumpConfig& cfg, double kappa);

/// J of the scaled split configuration, assembled from cached integrals.
double bump_energy(const ModelParams& params, const BumpConfig& cfg, double t);

/// Runs the construction for each N: larger-branch scaling, its energy, the
/// cross terms and their decay bound.  The truncation radius is raised (up to
/// the overlap limit) until the single-bump smallness gate
///   (lambda/4) ||u_R||^2 / (Sbar^2 S_{12/5}^4)
///     < (p-2)/(2p) ((4-p)/p)^{(4-p)/(p-2)} (g p_int / ||u_R||^2)^{2/(p-2)}
/// holds.  Requires beta above the branch-existence threshold; a missing
/// larger branch for some N throws BranchAbsentError.
BumpCurve bump_curve(const ModelParams& params, double R0, const std::vector<int>& Ns,
                     const SobolevConstants& consts, const RadialGrid& grid);

}  // namespace nehari

#endif
