#ifndef NEHARI_THRESHOLDS_HPP
#define NEHARI_THRESHOLDS_HPP

#include "nehari/energy.hpp"
#include "nehari/soliton.hpp"

namespace nehari {

/// Closed-form parameter thresholds, all rational expressions in the
/// embedding constants.  Writing P = S_bar^2 * S_125^4 and
/// W = S_p^{2p/(p-2)} (the squared norm of the unit-coefficient ground
/// state):
///   rho_p             = (p-2) P / (2 (4-p) W)
///   k_lambda          = max(rho_p, lambda)
///   beta0             = max((p-2)/2,
///                           [lambda p W / ((p-2) P)]^{(p-2)/2} (p/(4-p))^{(4-p)/2} - 1)
///   beta_thresh       = the piecewise coupling threshold (branches at rho_p)
///   lambda0           = 6 p sqrt(3p) (p-2) pi / (8 * 2^{1/3} (4-p) (6-p)^{3/2} W)
///   C_p_beta          = (p-2) [2(3-p)]^{(3-p)/(p-2)} ((1+beta)/p)^{1/(p-2)}   (p < 3)
///   C_beta            = (1+beta) S_p^{-p}
///   A_hls             = (16 * 2^{1/3} / (3 sqrt(3) pi))^2 ((6-p)/(p-2))^3
///   region_radius     = sqrt((p-2) P / (lambda (4-p)))
///   energy_cap_region = (p-2)^2 P / (4 p (4-p) k_lambda)
///   energy_cap_ground = (p-2)/(2p) W
///   p_g3              = (1 + sqrt(73)) / 3
struct ThresholdReport {
  double rho_p = 0.0;
  double k_lambda = 0.0;
  double beta0 = 0.0;
  double beta_thresh = 0.0;
  double lambda0 = 0.0;
  double C_p_beta = 0.0;  // NaN for p >= 3, where the bracket degenerates
  double C_beta = 0.0;
  double A_hls = 0.0;
  double region_radius = 0.0;
  double energy_cap_region = 0.0;
  double energy_cap_ground = 0.0;
  double p_g3 = 0.0;
};

ThresholdReport compute_thresholds(double p, double lambda, double beta,
                                   const SobolevConstants& consts);

/// lambda0 re-derived through the quartic-bound route
/// (4p / ((4-p)(p-2) W)) * sqrt(p (p-2) / A_hls); agrees with the printed
/// closed form to rounding.
double lambda0_via_hls(double p, const SobolevConstants& consts);

/// Sides of the certified curvature inequality at energy level theta:
///   lhs = A (4-p) lambda^2 theta^2
///         + lambda^2 sqrt(A^2 (4-p)^2 theta^4 + 32 p (p-2) A theta^2 / lambda^2)
///   rhs = 16 p (p-2) / (4-p),   with A = A_hls.
struct CurvatureGate {
  bool certified = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// True iff 3 <= p < 4, lambda < lambda0, and theta < energy_cap_ground; any
/// solution at such an energy level is then a strict ray maximum.
CurvatureGate prop_t6_certificate(double theta, double lambda, double p,
                                  const SobolevConstants& consts);

/// Large-p certificate: for p >= (1+sqrt(73))/3 every nontrivial solution is
/// a strict ray maximum.  Evaluates the curvature through the identity
///   h''(1) = -(2p(p-2)/(6-p)) z2 - (lambda (3p^2-2p-24)/(2(6-p))) z3
/// valid at solutions, and cross-checks its sign against classify.  Requires
/// an approximate solution (small Euler-Lagrange residual).
bool prop_g3_certificate(const VecPair& pair, const ModelParams& params,
                         double residual_tol = 1e-4);

}  // namespace nehari

#endif
