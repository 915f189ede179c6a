#include "nehari/multibump.hpp"

#include <cmath>
#include <stdexcept>

#include "nehari/coulomb.hpp"
#include "nehari/thresholds.hpp"

namespace nehari {

RadialFn truncate_profile(const RadialFn& w, double R0) {
  const RadialGrid& g = *w.grid;
  if (!(R0 > 0.0) || !(R0 < 0.5 * g.r_max))
    throw std::invalid_argument("truncate_profile: need 0 < R0 < r_max/2");
  RadialFn out(g);
  for (std::size_t i = 0; i < g.n; ++i) {
    const double r = g.nodes[i];
    double psi;
    if (r <= 0.5 * R0) {
      psi = 1.0;
    } else if (r >= R0) {
      psi = 0.0;
    } else {
      const double x = (r - 0.5 * R0) / (0.5 * R0);
      psi = 1.0 - (3.0 * x * x - 2.0 * x * x * x);
    }
    out.values[i] = w.values[i] * psi;
  }
  return out;
}

BumpConfig bump_config(const RadialFn& truncated, double R0, int N,
                       const ModelParams& params) {
  if (N < 1) throw std::invalid_argument("bump_config: N must be >= 1");
  BumpConfig cfg;
  cfg.R0 = R0;
  cfg.N = N;
  cfg.spacing = static_cast<double>(N) * N * N;
  if (N >= 2 && !(cfg.spacing > 2.0 * R0))
    throw std::invalid_argument("bump_config: overlapping supports (spacing <= 2 R0)");
  const RadialGrid& g = *truncated.grid;
  std::vector<double> rho(g.n);
  for (std::size_t i = 0; i < g.n; ++i) rho[i] = truncated.values[i] * truncated.values[i];
  cfg.q = integrate(g, rho);
  cfg.h1_sq = h1_norm_sq(truncated);
  cfg.p_integral = lp_norm_pow(truncated, params.p);
  cfg.hartree_self = hartree_bilinear(g, rho, rho, params.kappa);
  if (!(cfg.q > 0.0)) throw std::invalid_argument("bump_config: trivial truncated profile");
  return cfg;
}

double bump_cross_term(const BumpConfig& cfg, double kappa) {
  if (cfg.N < 2) return 0.0;
  double total = 0.0;
  for (int k = 1; k < cfg.N; ++k)
    total += 2.0 * static_cast<double>(cfg.N - k) *
             disjoint_interaction(cfg.q, cfg.q, k * cfg.spacing, kappa);
  return total;
}

FiberCoeffs bump_coeffs(const ModelParams& params, const BumpConfig& cfg) {
  const double gcoef = g_beta_profile(params.p, params.beta).g_max;
  FiberCoeffs c;
  c.A = cfg.N * cfg.h1_sq;
  c.B = cfg.N * cfg.hartree_self + bump_cross_term(cfg, params.kappa);
  c.C = cfg.N * gcoef * cfg.p_integral;
  c.p = params.p;
  c.lambda = params.lambda;
  return c;
}

double bump_energy(const ModelParams& params, const BumpConfig& cfg, double t) {
  return fiber_h(bump_coeffs(params, cfg), t);
}

namespace {

// Single-bump smallness gate; all quantities are plain norms, so the check
// is independent of the kernel prefactor.
bool truncation_gate(const ModelParams& params, const BumpConfig& cfg,
                     const SobolevConstants& consts) {
  const double p = params.p;
  const double prod = consts.S_bar * consts.S_bar * std::pow(consts.S_125, 4.0);
  const double gcoef = g_beta_profile(p, params.beta).g_max;
  const double lhs = 0.25 * params.lambda * cfg.h1_sq / prod;
  const double rhs = (p - 2.0) / (2.0 * p) * std::pow((4.0 - p) / p, (4.0 - p) / (p - 2.0)) *
                     std::pow(gcoef * cfg.p_integral / cfg.h1_sq, 2.0 / (p - 2.0));
  return lhs < rhs;
}

}  // namespace

BumpCurve bump_curve(const ModelParams& params, double R0, const std::vector<int>& Ns,
                     const SobolevConstants& consts, const RadialGrid& grid) {
  validate_params(params);
  if (Ns.empty()) throw std::invalid_argument("bump_curve: empty N list");
  const ThresholdReport th =
      compute_thresholds(params.p, params.lambda, params.beta, consts);
  if (!(params.beta > th.beta0))
    throw std::invalid_argument("bump_curve: beta below the branch-existence threshold");

  const double gcoef = g_beta_profile(params.p, params.beta).g_max;
  const SolitonResult w = scalar_ground_state(params.p, gcoef, grid);

  int min_pair_n = 0;
  for (int N : Ns)
    if (N >= 2 && (min_pair_n == 0 || N < min_pair_n)) min_pair_n = N;
  const double r0_cap = min_pair_n >= 2
                            ? 0.5 * min_pair_n * min_pair_n * min_pair_n * 0.999
                            : 0.5 * grid.r_max * 0.999;

  double r0 = R0;
  RadialFn truncated = truncate_profile(w.w, r0);
  BumpConfig probe = bump_config(truncated, r0, 1, params);
  for (int tries = 0; tries < 20 && !truncation_gate(params, probe, consts); ++tries) {
    r0 = std::min(1.1 * r0, r0_cap);
    truncated = truncate_profile(w.w, r0);
    probe = bump_config(truncated, r0, 1, params);
  }
  if (!truncation_gate(params, probe, consts))
    throw std::runtime_error("bump_curve: truncation gate unsatisfiable at this beta");

  BumpCurve curve;
  curve.R0 = r0;
  curve.q = probe.q;
  for (int N : Ns) {
    const BumpConfig cfg = bump_config(truncated, r0, N, params);
    const FiberCoeffs c = bump_coeffs(params, cfg);
    const NehariRoots roots = nehari_times(c);
    if (!roots.t_plus || roots.class_plus != NehariClass::Plus)
      throw BranchAbsentError("bump_curve: larger branch absent at N=" + std::to_string(N),
                              roots);
    curve.Ns.push_back(N);
    curve.spacing.push_back(cfg.spacing);
    curve.t2.push_back(*roots.t_plus);
    curve.energies.push_back(fiber_h(c, *roots.t_plus));
    curve.cross_terms.push_back(bump_cross_term(cfg, params.kappa));
    curve.bounds.push_back(cfg.N < 2 ? 0.0
                                     : static_cast<double>(cfg.N) * (cfg.N - 1) /
                                           (cfg.spacing - 2.0 * r0) * cfg.q * cfg.q);
  }
  return curve;
}

}  // namespace nehari
