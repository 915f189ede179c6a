#include "nehari/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "h1_precond.hpp"
#include "nehari/lambda_max.hpp"
#include "nehari/sampling.hpp"
#include "nehari/thresholds.hpp"

namespace nehari {

namespace {

double pair_norm_sq(const VecPair& x) { return h1_norm_sq(x.u) + h1_norm_sq(x.v); }

double pair_l2(const RadialFn& f) { return std::sqrt(lp_norm_pow(f, 2.0)); }

void take_abs(VecPair& x) {
  for (double& v : x.u.values) v = std::abs(v);
  for (double& v : x.v.values) v = std::abs(v);
}

bool is_vectorial(const VecPair& x) {
  const double nu = pair_l2(x.u), nv = pair_l2(x.v);
  return std::min(nu, nv) > 1e-3 * (nu + nv);
}

bool is_positive(const VecPair& x) {
  const RadialGrid& g = *x.u.grid;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (g.nodes[i] >= 0.5 * g.r_max) break;
    if (!(x.u.values[i] > 0.0) || !(x.v.values[i] > 0.0)) return false;
  }
  return true;
}

VecPair split_of(const RadialFn& z, const ModelParams& params) {
  const GBetaResult gb = g_beta_profile(params.p, params.beta);
  VecPair out{z, z};
  for (double& v : out.u.values) v *= std::sqrt(gb.s_beta);
  for (double& v : out.v.values) v *= std::sqrt(1.0 - gb.s_beta);
  return out;
}

// Scans t over a log range for the lowest ray energy; returns (t, h(t)).
std::pair<double, double> ray_minimum(const FiberCoeffs& c) {
  double best_t = 1.0, best_h = fiber_h(c, 1.0);
  for (int k = -300; k <= 300; ++k) {
    const double t = std::pow(10.0, k / 75.0);  // 1e-4 .. 1e4
    const double h = fiber_h(c, t);
    if (h < best_h) {
      best_h = h;
      best_t = t;
    }
  }
  return {best_t, best_h};
}

void fill_report(SolveReport& rep, const ModelParams& params, int iterations,
                 SolveStatus status, double residual_norm) {
  rep.breakdown = total_energy(rep.pair, params);
  rep.residual = residual_norm;
  rep.poho = pohozaev(rep.pair, params);
  rep.vectorial = is_vectorial(rep.pair);
  rep.positive = is_positive(rep.pair);
  rep.iterations = iterations;
  rep.status = status;
  rep.converged = status == SolveStatus::Converged;
  if (nontrivial(rep.pair)) {
    const FiberCoeffs c = fiber_coeffs(rep.pair, params);
    if (std::abs(nehari_defect(c)) <= 1e-8 * c.A) {
      rep.nehari_class = classify(rep.pair, params);
    }
  }
}

struct DescentOutcome {
  SolveStatus status = SolveStatus::MaxIters;
  int iterations = 0;
  double residual = 0.0;
};

// Preconditioned Armijo descent; an empty project runs the free flow, and
// otherwise every trial is mapped back onto the constraint branch.
DescentOutcome descend(VecPair& x, const ModelParams& params, const SolverConfig& config,
                       const std::function<VecPair(const VecPair&)>& project) {
  const RadialGrid& grid = *x.u.grid;
  DescentOutcome out;
  double J = total_energy(x, params).total;
  const double seed_norm_sq = pair_norm_sq(x);
  double step = config.step0;
  int stalled = 0;

  for (out.iterations = 0; out.iterations < config.max_iters; ++out.iterations) {
    const ResidualPair res = el_residual(x, params);
    out.residual = res.norm;
    if (res.norm < config.tol_residual) {
      out.status = SolveStatus::Converged;
      return out;
    }
    if (!project && pair_norm_sq(x) < 1e-12 * std::max(seed_norm_sq, 1.0)) {
      out.status = SolveStatus::TrivialLimit;
      return out;
    }

    const std::vector<double> du = detail::h1_solve(grid, res.res_u.values);
    const std::vector<double> dv = detail::h1_solve(grid, res.res_v.values);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < grid.n; ++i)
      acc += static_cast<long double>(grid.weights[i]) *
             (res.res_u.values[i] * du[i] + res.res_v.values[i] * dv[i]);
    const double slope = 4.0 * M_PI * static_cast<double>(acc);

    bool accepted = false;
    bool branch_seen = false;
    // Energy decreases shrink quadratically in the residual, so close to the
    // minimum they sink below the floating-point resolution of J; from there
    // progress is certified on the residual itself, which keeps full
    // relative precision all the way down.
    const bool residual_mode =
        res.norm * res.norm < 64.0 * std::numeric_limits<double>::epsilon() *
                                  (1.0 + std::abs(J));
    for (int bt = 0; bt < 50; ++bt) {
      VecPair trial = x;
      for (std::size_t i = 0; i < grid.n; ++i) {
        trial.u.values[i] -= step * du[i];
        trial.v.values[i] -= step * dv[i];
      }
      take_abs(trial);
      if (project) {
        try {
          trial = project(trial);
          branch_seen = true;
        } catch (const BranchAbsentError&) {
          step *= 0.5;
          continue;
        }
      }
      const double Jt = total_energy(trial, params).total;
      const double fp_slack =
          8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(J));
      bool take = Jt <= J - 1e-4 * step * slope + fp_slack;
      if (!take && residual_mode && Jt <= J + fp_slack)
        take = el_residual(trial, params).norm < 0.999 * res.norm;
      if (take) {
        x = std::move(trial);
        if (!residual_mode && std::abs(J - Jt) <= config.tol_energy * (1.0 + std::abs(Jt)))
          ++stalled;
        else
          stalled = 0;
        J = Jt;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || stalled > 40) {
      if (!accepted && project && !branch_seen) {
        out.status = SolveStatus::BranchLost;
        return out;
      }
      // A stalled free flow that has nearly emptied the pair is the
      // collapse-to-zero outcome, not a failed minimization.
      out.status = (!project && pair_norm_sq(x) < 1e-6 * std::max(seed_norm_sq, 1.0))
                       ? SolveStatus::TrivialLimit
                       : SolveStatus::MaxIters;
      return out;
    }
    step = std::min(step * 2.0, 1e6);
  }
  return out;
}

}  // namespace

VecPair split_soliton_seed(const ModelParams& params, const RadialGrid& grid,
                           NehariClass branch) {
  validate_params(params);
  VecPair base;
  if (params.beta > 0.0) {
    const GBetaResult gb = g_beta_profile(params.p, params.beta);
    const SolitonResult w = scalar_ground_state(params.p, gb.g_max, grid);
    base = split_of(w.w, params);
  } else {
    const SolitonResult w = scalar_ground_state(params.p, 1.0, grid);
    base = VecPair{w.w, RadialFn(grid)};
  }
  return project_to_nehari(base, params, branch);
}

SolveReport minimize_global(const ModelParams& params, const RadialGrid& grid,
                            const SolverConfig& config) {
  validate_params(params);
  SolveReport rep;

  // Seed with the lowest negative ray energy available; order: split ground
  // state, random rays, quotient-ascent maximizer.
  VecPair seed;
  double seed_J = std::numeric_limits<double>::infinity();
  {
    VecPair base;
    if (params.beta > 0.0) {
      const GBetaResult gb = g_beta_profile(params.p, params.beta);
      const SolitonResult w = scalar_ground_state(params.p, gb.g_max, grid);
      base = split_of(w.w, params);
    } else {
      const SolitonResult w = scalar_ground_state(params.p, 1.0, grid);
      base = VecPair{w.w, RadialFn(grid)};
    }
    const FiberCoeffs c = fiber_coeffs(base, params);
    const auto [t, h] = ray_minimum(c);
    seed = base;
    for (double& v : seed.u.values) v *= t;
    for (double& v : seed.v.values) v *= t;
    seed_J = h;
  }
  if (seed_J >= 0.0) {
    std::mt19937_64 rng(config.seed);
    for (int k = 0; k < 32; ++k) {
      VecPair cand = random_pair(grid, rng);
      const FiberCoeffs c = fiber_coeffs(cand, params);
      const auto [t, h] = ray_minimum(c);
      if (h < seed_J) {
        for (double& v : cand.u.values) v *= t;
        for (double& v : cand.v.values) v *= t;
        seed = std::move(cand);
        seed_J = h;
      }
    }
  }
  if (seed_J >= 0.0 && params.p < 3.0 && params.lambda > 0.0) {
    QuotientConfig qc;
    qc.seed = config.seed;
    qc.kappa = params.kappa;
    qc.n_seeds = 4;
    qc.max_iters = 200;
    const QuotientResult qr =
        maximize_quotient(params.beta, params.p, QuotientVariant::Lambda, grid, qc);
    if (params.lambda < 4.0 * qr.value) {
      VecPair cand = qr.maximizer;
      const FiberCoeffs c = fiber_coeffs(cand, params);
      const auto [t, h] = ray_minimum(c);
      if (h < seed_J) {
        for (double& v : cand.u.values) v *= t;
        for (double& v : cand.v.values) v *= t;
        seed = std::move(cand);
        seed_J = h;
      }
    }
  }

  rep.pair = seed;
  DescentOutcome out = descend(rep.pair, params, config, {});

  // A semitrivial limit cannot be the minimizer when the components couple:
  // splitting strictly lowers J, so re-descend from the split.
  int restarts = 0;
  while (out.status == SolveStatus::Converged && params.beta > 0.0 &&
         !is_vectorial(rep.pair) && nontrivial(rep.pair) && restarts < 2) {
    const RadialFn& z = pair_l2(rep.pair.u) >= pair_l2(rep.pair.v) ? rep.pair.u : rep.pair.v;
    VecPair restarted = split_of(z, params);
    const DescentOutcome again = descend(restarted, params, config, {});
    rep.pair = std::move(restarted);
    out = again;
    ++restarts;
  }

  // Land exactly on the stationary set (the scaling correction is O(defect)).
  if (out.status == SolveStatus::Converged && nontrivial(rep.pair)) {
    try {
      rep.pair = project_to_nehari(rep.pair, params, NehariClass::Plus);
    } catch (const BranchAbsentError&) {
      try {
        rep.pair = project_to_nehari(rep.pair, params, NehariClass::Minus);
      } catch (const BranchAbsentError&) {
      }
    }
    out.residual = el_residual(rep.pair, params).norm;
  }
  fill_report(rep, params, out.iterations, out.status, out.residual);
  return rep;
}

SolveReport minimize_nehari_minus(const ModelParams& params, const RadialGrid& grid,
                                  const SolverConfig& config, const VecPair& init) {
  validate_params(params);
  if (init.u.grid != &grid || init.v.grid != &grid)
    throw std::invalid_argument("minimize_nehari_minus: init does not live on the given grid");
  SolveReport rep;
  rep.pair = project_to_nehari(init, params, NehariClass::Minus);

  auto project = [&params](const VecPair& x) {
    return project_to_nehari(x, params, NehariClass::Minus);
  };
  DescentOutcome out = descend(rep.pair, params, config, project);

  // A semitrivial branch minimum sits above the scalar mountain level when
  // beta > 0; restart once from the optimally split profile.
  if (out.status == SolveStatus::Converged && params.beta > 0.0 && !is_vectorial(rep.pair)) {
    const RadialFn& z = pair_l2(rep.pair.u) >= pair_l2(rep.pair.v) ? rep.pair.u : rep.pair.v;
    try {
      VecPair restarted = project_to_nehari(split_of(z, params), params, NehariClass::Minus);
      const DescentOutcome again = descend(restarted, params, config, project);
      if (again.status == SolveStatus::Converged &&
          total_energy(restarted, params).total < total_energy(rep.pair, params).total) {
        rep.pair = std::move(restarted);
        out = again;
      }
    } catch (const BranchAbsentError&) {
    }
  }
  fill_report(rep, params, out.iterations, out.status, out.residual);
  return rep;
}

SolveReport certify_ground_state(SolveReport report, const ModelParams& params,
                                 const SobolevConstants& consts) {
  if (!report.converged)
    throw std::invalid_argument("certify_ground_state: report not converged");
  report.certified_ground_state = false;
  report.certificate_source = CertificateSource::None;
  const double p_g3 = (1.0 + std::sqrt(73.0)) / 3.0;
  if (params.p >= p_g3) {
    report.certified_ground_state = true;
    report.certificate_source = CertificateSource::G3;
    return report;
  }
  if (params.p >= 3.0 && params.lambda > 0.0) {
    const ThresholdReport th = compute_thresholds(params.p, params.lambda, params.beta, consts);
    if (params.lambda < th.lambda0 && report.breakdown.total < th.energy_cap_ground &&
        report.breakdown.total > 0.0) {
      report.certified_ground_state = true;
      report.certificate_source = CertificateSource::T6;
    }
  }
  return report;
}

}  // namespace nehari
