#ifndef NEHARI_SOLITON_HPP
#define NEHARI_SOLITON_HPP

#include "nehari/grid.hpp"

namespace nehari {

/// Positive decreasing radial solution of -Lap w + w = g |w|^{p-2} w,
/// resampled onto a grid, with its defining integrals.
struct SolitonResult {
  RadialFn w;
  double g = 1.0;
  double norm_h1_sq = 0.0;  // ||w||_{H^1}^2
  double p_integral = 0.0;  // int g |w|^p
  double level = 0.0;       // (p-2)/(2p) * norm_h1_sq
  double sigma = 0.0;       // w(0), the shooting height
};

/// Optimal embedding constants, all as norm ratios:
///   S_p    = inf ||u||_{H^1} / ||u||_{L^p}      (2 < p < 6),
///   S_bar  = inf ||grad u||_{L^2} / ||u||_{L^6} = sqrt(3) (pi/2)^{2/3},
///   S_125  = S_{12/5}.
/// S_p is realized by the ground state: S_p = ||w||_{H^1}^{(p-2)/p}.
struct SobolevConstants {
  double S_p = 0.0;
  double S_bar = 0.0;
  double S_125 = 0.0;
  double p = 0.0;
};

/// Shooting solve of the radial ODE w'' + (2/r) w' = w - g w^{p-1} from
/// w(0) = sigma, w'(0) = 0, bisecting sigma between profiles that cross zero
/// and profiles that turn back up, with an exponential tail graft past the
/// point where the orbit leaves the decaying manifold.  Requires 2 < p < 6,
/// g > 0.  Deterministic for fixed inputs.
SolitonResult scalar_ground_state(double p, double g, const RadialGrid& grid);

/// True iff the orbit launched from height sigma crosses zero before r_end
/// (heights above the ground state overshoot; heights below turn back up).
/// The transition is monotone in sigma, which is what makes the bisection
/// well posed; exposed so that property can be checked directly.
bool orbit_crosses(double p, double g, double sigma, double r_end);

SobolevConstants sobolev_constants(double p, const RadialGrid& grid);

double sobolev_s_bar_closed_form();

/// Direct Rayleigh-quotient minimization of ||grad u|| / ||u||_{L^6} over the
/// bubble family (1 + (r/eps)^2)^{-1/2}; cross-checks the closed form.
double sobolev_s_bar_bubble(const RadialGrid& grid);

/// Ground-state level of the scalar limit problem with coupling-maximized
/// coefficient:  alpha = (p-2)/(2p) * (S_p^p / g_beta(s_beta))^{2/(p-2)}.
double scalar_level(double p, double beta, const SobolevConstants& consts);

}  // namespace nehari

#endif
