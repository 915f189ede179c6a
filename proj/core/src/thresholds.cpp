#include "nehari/thresholds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nehari/fibering.hpp"

namespace nehari {

ThresholdReport compute_thresholds(double p, double lambda, double beta,
                                   const SobolevConstants& consts) {
  if (!(p > 2.0 && p < 4.0)) throw std::invalid_argument("thresholds: p out of (2,4)");
  if (!(lambda > 0.0)) throw std::invalid_argument("thresholds: lambda must be positive");
  if (!(beta >= 0.0)) throw std::invalid_argument("thresholds: beta must be >= 0");

  const double P = consts.S_bar * consts.S_bar * std::pow(consts.S_125, 4.0);
  const double W = std::pow(consts.S_p, 2.0 * p / (p - 2.0));

  ThresholdReport r;
  r.rho_p = (p - 2.0) * P / (2.0 * (4.0 - p) * W);
  r.k_lambda = (lambda < r.rho_p) ? r.rho_p : lambda;

  r.beta0 = std::max((p - 2.0) / 2.0,
                     std::pow(lambda * p * W / ((p - 2.0) * P), (p - 2.0) / 2.0) *
                             std::pow(p / (4.0 - p), (4.0 - p) / 2.0) -
                         1.0);

  if (lambda < r.rho_p) {
    const double inner =
        1.0 + std::sqrt(1.0 + 2.0 * p * W / ((p - 2.0) * P) *
                                  std::pow(2.0 / (4.0 - p), 4.0 / (p - 2.0)) * lambda);
    r.beta_thresh = std::max((p - 2.0) / 2.0, std::pow(inner, (p - 2.0) / 2.0) - 1.0);
  } else {
    const double inner =
        2.0 * (4.0 - p) * W / ((p - 2.0) * P) *
        (1.0 + std::sqrt(1.0 + p * std::pow(2.0, 4.0 / (p - 2.0)) /
                                   std::pow(4.0 - p, (p + 2.0) / (p - 2.0)))) *
        lambda;
    r.beta_thresh = std::max((p - 2.0) / 2.0, std::pow(inner, (p - 2.0) / 2.0) - 1.0);
  }

  r.lambda0 = 6.0 * p * std::sqrt(3.0 * p) * (p - 2.0) * M_PI /
              (8.0 * std::cbrt(2.0) * (4.0 - p) * std::pow(6.0 - p, 1.5) * W);

  if (p < 3.0) {
    r.C_p_beta = (p - 2.0) * std::pow(2.0 * (3.0 - p), (3.0 - p) / (p - 2.0)) *
                 std::pow((1.0 + beta) / p, 1.0 / (p - 2.0));
  } else {
    r.C_p_beta = std::numeric_limits<double>::quiet_NaN();
  }

  r.C_beta = (1.0 + beta) * std::pow(consts.S_p, -p);

  const double hls = 16.0 * std::cbrt(2.0) / (3.0 * std::sqrt(3.0) * M_PI);
  r.A_hls = hls * hls * std::pow((6.0 - p) / (p - 2.0), 3.0);

  r.region_radius = std::sqrt((p - 2.0) * P / (lambda * (4.0 - p)));
  r.energy_cap_region = (p - 2.0) * (p - 2.0) * P / (4.0 * p * (4.0 - p) * r.k_lambda);
  r.energy_cap_ground = (p - 2.0) / (2.0 * p) * W;
  r.p_g3 = (1.0 + std::sqrt(73.0)) / 3.0;
  return r;
}

double lambda0_via_hls(double p, const SobolevConstants& consts) {
  const double W = std::pow(consts.S_p, 2.0 * p / (p - 2.0));
  const double hls = 16.0 * std::cbrt(2.0) / (3.0 * std::sqrt(3.0) * M_PI);
  const double A = hls * hls * std::pow((6.0 - p) / (p - 2.0), 3.0);
  return 4.0 * p / ((4.0 - p) * (p - 2.0) * W) * std::sqrt(p * (p - 2.0) / A);
}

CurvatureGate prop_t6_certificate(double theta, double lambda, double p,
                                  const SobolevConstants& consts) {
  if (!(p >= 3.0 && p < 4.0))
    throw std::invalid_argument("prop_t6_certificate: requires 3 <= p < 4");
  const ThresholdReport th = compute_thresholds(p, lambda, 0.0, consts);
  CurvatureGate gate;
  const double A = th.A_hls;
  const double s = A * A * std::pow(4.0 - p, 2.0) * std::pow(theta, 4.0) +
                   32.0 * p * (p - 2.0) * A * theta * theta / (lambda * lambda);
  gate.lhs = A * (4.0 - p) * lambda * lambda * theta * theta +
             lambda * lambda * std::sqrt(s);
  gate.rhs = 16.0 * p * (p - 2.0) / (4.0 - p);
  gate.certified = (lambda < th.lambda0) && (theta < th.energy_cap_ground) && (theta > 0.0);
  return gate;
}

bool prop_g3_certificate(const VecPair& pair, const ModelParams& params,
                         double residual_tol) {
  validate_params(params, /*relaxed_p=*/true);
  if (!(params.p < 6.0)) throw std::invalid_argument("prop_g3_certificate: p out of range");
  const ResidualPair res = el_residual(pair, params);
  const double scale = std::sqrt(h1_norm_sq(pair.u) + h1_norm_sq(pair.v));
  if (!(res.norm <= residual_tol * std::max(1.0, scale)))
    throw std::invalid_argument("prop_g3_certificate: identity needs a solution; residual = " +
                                std::to_string(res.norm));

  const double p = params.p;
  const double poly = 3.0 * p * p - 2.0 * p - 24.0;
  const bool certified = poly >= -1e-9;  // admits the boundary root of the polynomial

  // Solution-only identity for the ray curvature; its sign must match the
  // direct on-manifold classification.
  const PohozaevData d = pohozaev(pair, params);
  const double hpp_identity = -2.0 * p * (p - 2.0) / (6.0 - p) * d.z2 -
                              params.lambda * poly / (2.0 * (6.0 - p)) * d.z3;
  if (certified && poly > 1e-9) {
    if (!(hpp_identity < 0.0))
      throw std::logic_error("prop_g3_certificate: identity sign violated");
    const NehariClass cls = classify(pair, params, 1e-4);
    if (cls == NehariClass::Plus)
      throw std::logic_error("prop_g3_certificate: classify disagrees with identity");
  }
  return certified;
}

}  // namespace nehari
