#include "nehari/verify.hpp"

#include <cmath>
#include <sstream>

#include "nehari/coulomb.hpp"
#include "nehari/energy.hpp"
#include "nehari/fibering.hpp"
#include "nehari/grid.hpp"
#include "nehari/sampling.hpp"
#include "nehari/soliton.hpp"
#include "nehari/thresholds.hpp"

namespace nehari {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail) {
  out.push_back({name, pass, detail});
}

}  // namespace

std::vector<CheckResult> verify_identities(unsigned long long seed) {
  std::vector<CheckResult> out;
  const RadialGrid grid = make_grid(1024, 30.0, GridScheme::Log);
  std::mt19937_64 rng(seed);

  {
    const RadialGrid uni = make_grid(64, 1.0, GridScheme::Uniform);
    double worst = 0.0;
    for (int k = 0; k <= 2; ++k) {
      std::vector<double> s(uni.n);
      for (std::size_t i = 0; i < uni.n; ++i) s[i] = std::pow(uni.nodes[i], k);
      const double exact = 4.0 * M_PI / (k + 3.0);
      worst = std::max(worst, std::abs(integrate(uni, s) - exact) / exact);
    }
    check(out, "quadrature moments r^k, k<=2", worst < 1e-10, "max rel err " + num(worst));
  }
  {
    RadialFn u = random_profile(grid, rng);
    RadialFn cu = u;
    for (double& v : cu.values) v *= 2.75;
    const double e1 = std::abs(h1_norm_sq(cu) - 2.75 * 2.75 * h1_norm_sq(u)) / h1_norm_sq(cu);
    const double e2 =
        std::abs(lp_norm_pow(cu, 2.5) - std::pow(2.75, 2.5) * lp_norm_pow(u, 2.5)) /
        lp_norm_pow(cu, 2.5);
    const double e3 = std::abs(strauss_ratio(cu) - strauss_ratio(u)) / strauss_ratio(u);
    check(out, "norm homogeneity", e1 < 1e-12 && e2 < 1e-12 && e3 < 1e-12,
          "rel errs " + num(e1) + ", " + num(e2) + ", " + num(e3));
  }
  {
    const ModelParams params{2.5, 1.0, 1.0, 1.0};
    const VecPair pair = random_pair(grid, rng);
    const FiberCoeffs c = fiber_coeffs(pair, params);
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0}) {
      VecPair scaled = pair;
      for (double& v : scaled.u.values) v *= t;
      for (double& v : scaled.v.values) v *= t;
      const double J = total_energy(scaled, params).total;
      worst = std::max(worst, std::abs(J - fiber_h(c, t)) / std::abs(J));
    }
    check(out, "ray map matches scaled energy", worst < 1e-10, "max rel err " + num(worst));
  }
  {
    const ModelParams params{2.5, 1.0, 1.0, 1.0};
    const VecPair pair = random_pair(grid, rng);
    const FiberCoeffs c = fiber_coeffs(pair, params);
    const ResidualPair res = el_residual(pair, params);
    const double lhs = energy_directional(res, pair);
    const double rhs = nehari_defect(c);
    const double err = std::abs(lhs - rhs) / (std::abs(rhs) + 1e-30);
    check(out, "stationarity pairing <J',x> = A + lambda B - C", err < 1e-10,
          "rel err " + num(err));
  }
  {
    std::uniform_real_distribution<double> th(0.1, 5.0), tt(0.0, 1.0), pp(2.2, 3.9),
        ll(0.1, 5.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double theta = th(rng), t = tt(rng), p = pp(rng), lambda = ll(rng);
      const auto z = pohozaev_solution(theta, t, p, lambda);
      for (double gap : pohozaev_system_gap(z, theta, p, lambda))
        worst = std::max(worst, std::abs(gap) / theta);
    }
    const auto a1 = pohozaev_solution(1.0, 0.0, 3.0, 1.0);
    const auto a2 = pohozaev_solution(1.0, 1.0, 3.0, 1.0);
    const bool anchors = a1 == std::array<double, 4>{3.0, 3.0, 0.0, 6.0} &&
                         a2 == std::array<double, 4>{4.0, 3.0, 2.0, 9.0};
    check(out, "scaling linear system", worst < 1e-12 && anchors,
          "max rel gap " + num(worst));
  }
  {
    const FiberCoeffs c{1.0, 1.0, 3.0, 3.0, 1.0};
    const NehariRoots roots = nehari_times(c);
    const double tm = (3.0 - std::sqrt(5.0)) / 2.0, tp = (3.0 + std::sqrt(5.0)) / 2.0;
    const bool ok = roots.count == 2 && std::abs(*roots.t_minus - tm) < 1e-12 &&
                    std::abs(*roots.t_plus - tp) < 1e-12;
    check(out, "quadratic roots closed form", ok,
          "roots " + num(roots.count == 2 ? *roots.t_minus : -1.0) + ", " +
              num(roots.count == 2 ? *roots.t_plus : -1.0));
  }
  {
    const ModelParams params{2.5, 1.0, 1.0, 1.0};
    const RadialFn z = random_profile(grid, rng);
    const SplitResult sp = split_equal(z, params);
    VecPair split{z, z};
    for (double& v : split.u.values) v *= std::sqrt(sp.s_z);
    for (double& v : split.v.values) v *= std::sqrt(1.0 - sp.s_z);
    const double direct = scalar_energy(z, params) - total_energy(split, params).total;
    const double err = std::abs(direct - sp.energy_drop) / sp.energy_drop;
    check(out, "split drop two-path agreement", err < 1e-10, "rel err " + num(err));
  }
  {
    const RadialFn u = random_profile(grid, rng);
    std::vector<double> rho(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) rho[i] = u.values[i] * u.values[i];
    const CoulombField f = newton_potential(grid, rho, 1.0);
    const double err =
        std::abs(f.phi.values.back() * grid.r_max - f.total_charge) / f.total_charge;
    check(out, "far field r*phi = Q", err < 1e-12, "rel err " + num(err));
  }
  return out;
}

std::vector<CheckResult> verify_inequalities(unsigned long long seed) {
  std::vector<CheckResult> out;
  const RadialGrid grid = make_grid(1024, 30.0, GridScheme::Log);
  std::mt19937_64 rng(seed);

  {
    bool ok = true;
    double min_gap0 = 1e300, min_gap1 = 1e300;
    for (int k = 0; k < 200; ++k) {
      const VecPair pair = random_pair(grid, rng, true);
      if (hartree_energy(pair, 1.0) < 0.0) ok = false;
      min_gap0 = std::min(min_gap0, lions_gap(pair, 1.0, 1.0, 0));
      min_gap1 = std::min(min_gap1, lions_gap(pair, 1.0, 1.0, 1));
    }
    check(out, "Coulomb energy nonnegative", ok, "200 pairs");
    check(out, "Poisson-energy inequality at a=1", min_gap0 >= 0.0 && min_gap1 >= 0.0,
          "min slacks " + num(min_gap0) + ", " + num(min_gap1));
  }
  {
    const ModelParams params{2.5, 1.0, 1.0, 1.0};
    double min_gap = 1e300;
    for (int k = 0; k < 200; ++k) {
      const VecPair pair = random_pair(grid, rng, true);
      min_gap = std::min(min_gap,
                         total_energy(pair, params).total - coercivity_lower_bound(pair, params));
    }
    check(out, "coercivity lower bound", min_gap >= 0.0, "min slack " + num(min_gap));
  }
  {
    bool ok = true;
    for (double p : {2.2, 2.5, 3.0, 3.5, 3.9})
      for (double beta : {0.01, 0.1, 1.0, 10.0}) {
        const GBetaResult gb = g_beta_profile(p, beta);
        if (!(gb.g_excess > 0.0)) ok = false;
        if (beta >= (p - 2.0) / 2.0 && std::abs(gb.s_beta - 0.5) > 1e-10) ok = false;
      }
    check(out, "coupling gain above one and symmetric maximizer", ok, "p x beta grid");
  }
  {
    const SobolevConstants consts = sobolev_constants(2.5, grid);
    bool ok = true;
    std::string detail;
    for (double p : {2.5, 3.0, 3.5}) {
      const SobolevConstants cp = sobolev_constants(p, grid);
      for (double lambda : {0.05, 0.5, 2.0}) {
        const ThresholdReport th = compute_thresholds(p, lambda, 1.0, cp);
        if (!(th.beta_thresh > th.beta0)) {
          ok = false;
          detail = "violated at p=" + num(p) + " lambda=" + num(lambda);
        }
      }
    }
    (void)consts;
    check(out, "coupling threshold dominates branch threshold", ok, detail);
  }
  return out;
}

}  // namespace nehari
