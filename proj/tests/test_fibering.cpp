#include "doctest.h"
#include "nehari/fibering.hpp"
#include "nehari/soliton.hpp"
#include "nehari/thresholds.hpp"
#include "support.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

using namespace nehari;
using nehari::test::gaussian;
using nehari::test::rel_err;

TEST_CASE("coupling gain profile") {
  // beta >= (p-2)/2 pins the maximizer at 1/2.
  const GBetaResult r1 = g_beta_profile(3.0, 1.0);
  CHECK(std::abs(r1.s_beta - 0.5) < 1e-10);
  CHECK(std::abs(r1.g_max - std::sqrt(2.0)) < 1e-9);

  const GBetaResult r0 = g_beta_profile(3.0, 0.0);
  CHECK(r0.g_max == 1.0);
  CHECK((r0.s_beta == 0.0 || r0.s_beta == 1.0));

  // Small beta: interior maximizer away from 1/2, cross-checked against a
  // dense scan at 1e-6 resolution.
  const GBetaResult rs = g_beta_profile(2.5, 0.1);
  CHECK(rs.g_max > 1.0);
  CHECK(rs.s_beta != doctest::Approx(0.5).epsilon(1e-6));
  double scan_best = 0.0;
  for (int k = 1; k < 1000000; ++k) {
    scan_best = std::max(scan_best, g_beta_value(2.5, 0.1, k * 1e-6));
  }
  CHECK(std::abs(rs.g_max - scan_best) < 1e-9);

  for (double p : {2.2, 2.5, 3.0, 3.5, 3.9})
    for (double beta : {0.01, 0.1, 1.0, 10.0}) {
      const GBetaResult r = g_beta_profile(p, beta);
      CHECK(r.g_excess > 0.0);
      CHECK(r.g_max >= 1.0);
      if (beta >= (p - 2.0) / 2.0) CHECK(std::abs(r.s_beta - 0.5) < 1e-10);
    }
}

TEST_CASE("ray coefficients") {
  const RadialGrid& g = nehari::test::small_grid();
  const ModelParams params{2.5, 1.0, 0.8, 1.0};
  const RadialFn z = gaussian(g);
  const VecPair semitrivial{z, RadialFn(g)};
  const FiberCoeffs c = fiber_coeffs(semitrivial, params);
  CHECK(rel_err(c.C, lp_norm_pow(z, params.p)) < 1e-14);

  std::mt19937_64 rng(10);
  const VecPair pair = random_pair(g, rng);
  const FiberCoeffs cp = fiber_coeffs(pair, params);
  for (double t : {0.5, 1.0, 2.0}) {
    VecPair scaled = pair;
    for (double& v : scaled.u.values) v *= t;
    for (double& v : scaled.v.values) v *= t;
    CHECK(rel_err(total_energy(scaled, params).total, fiber_h(cp, t)) < 1e-10);
  }
  const ResidualPair res = el_residual(pair, params);
  CHECK(rel_err(energy_directional(res, pair), nehari_defect(cp)) < 1e-10);

  VecPair zero{RadialFn(g), RadialFn(g)};
  CHECK_THROWS_AS(fiber_coeffs(zero, params), std::invalid_argument);
}

TEST_CASE("stationary scalings: closed forms and degenerate cases") {
  const NehariRoots two = nehari_times(FiberCoeffs{1.0, 1.0, 3.0, 3.0, 1.0});
  REQUIRE(two.count == 2);
  CHECK(std::abs(*two.t_minus - (3.0 - std::sqrt(5.0)) / 2.0) < 1e-12);
  CHECK(std::abs(*two.t_plus - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-12);
  CHECK(two.class_minus == NehariClass::Minus);
  CHECK(two.class_plus == NehariClass::Plus);

  const NehariRoots one = nehari_times(FiberCoeffs{1.0, 1.0, 2.0, 3.0, 1.0});
  CHECK(one.count == 1);
  CHECK(std::abs(*one.t_minus - 1.0) < 1e-8);
  CHECK(one.class_minus == NehariClass::Zero);

  const NehariRoots none = nehari_times(FiberCoeffs{1.0, 1.0, 1.0, 3.0, 1.0});
  CHECK(none.count == 0);

  // Without the quartic term there is a single ray maximum.
  const NehariRoots single = nehari_times(FiberCoeffs{2.0, 5.0, 1.0, 2.5, 0.0});
  CHECK(single.count == 1);
  CHECK(single.class_minus == NehariClass::Minus);
  CHECK(std::abs(*single.t_minus - std::pow(2.0, 2.0)) < 1e-10);  // (A/C)^{1/(p-2)}

  // Sign conventions of the two curvature expressions at manufactured
  // on-manifold coefficients (A + lambda B - C = 0).
  const double s1 = -(3.0 - 2.0) * 1.0 + 1.0 * (4.0 - 3.0) * 0.1;  // A=1, lB=0.1, C=1.1
  const double s2 = -2.0 * 1.0 + (4.0 - 3.0) * 1.1;
  CHECK(s1 < 0.0);
  CHECK(s2 < 0.0);
  CHECK(std::abs(s1 - s2) < 1e-15);
}

TEST_CASE("projection onto the stationary branches") {
  const RadialGrid& g = nehari::test::small_grid();
  std::mt19937_64 rng(11);

  // lambda = 0: the single branch with the explicit scaling (A/C)^{1/(p-2)}.
  const ModelParams free{2.5, 0.0, 0.5, 1.0};
  const VecPair pair = random_pair(g, rng);
  const FiberCoeffs c0 = fiber_coeffs(pair, free);
  const VecPair on_m = project_to_nehari(pair, free, NehariClass::Minus);
  const FiberCoeffs cm = fiber_coeffs(on_m, free);
  CHECK(std::abs(nehari_defect(cm)) < 1e-10 * cm.A);
  const double t0 = std::pow(c0.A / c0.C, 1.0 / (free.p - 2.0));
  CHECK(rel_err(std::sqrt(h1_norm_sq(on_m.u) / h1_norm_sq(pair.u)), t0) < 1e-10);
  CHECK(classify(on_m, free) == NehariClass::Minus);

  // Already on the manifold: the projection is the identity scaling.
  const VecPair again = project_to_nehari(on_m, free, NehariClass::Minus);
  CHECK(rel_err(h1_norm_sq(again.u), h1_norm_sq(on_m.u)) < 1e-10);

  // A requested branch that does not exist carries the roots in the error.
  const ModelParams strong{2.5, 50.0, 0.0, 1.0};
  try {
    project_to_nehari(pair, strong, NehariClass::Plus);
    FAIL("expected BranchAbsentError");
  } catch (const BranchAbsentError& err) {
    CHECK(err.roots().count < 2);
  }
}

TEST_CASE("classification requires the manifold") {
  const RadialGrid& g = nehari::test::small_grid();
  std::mt19937_64 rng(12);
  const ModelParams params{2.5, 1.0, 1.0, 1.0};
  const VecPair pair = random_pair(g, rng);
  CHECK_THROWS_AS(classify(pair, params), std::invalid_argument);
}

TEST_CASE("equal-profile split") {
  const RadialGrid& g = nehari::test::default_grid();
  const ModelParams params{2.5, 1.0, 1.0, 1.0};
  const RadialFn z = gaussian(g);
  const SplitResult sp = split_equal(z, params);
  CHECK(sp.s_z > 0.0);
  CHECK(sp.s_z < 1.0);
  CHECK(sp.s_z == doctest::Approx(0.5).epsilon(1e-12));  // beta >= (p-2)/2
  CHECK(sp.energy_drop > 0.0);

  VecPair split{z, z};
  for (double& v : split.u.values) v *= std::sqrt(sp.s_z);
  for (double& v : split.v.values) v *= std::sqrt(1.0 - sp.s_z);
  const double direct = scalar_energy(z, params) - total_energy(split, params).total;
  CHECK(rel_err(direct, sp.energy_drop) < 1e-10);

  // Homogeneity of the drop under z -> c z.
  RadialFn cz = z;
  for (double& v : cz.values) v *= 1.7;
  const SplitResult spc = split_equal(cz, params);
  CHECK(rel_err(spc.energy_drop, std::pow(1.7, params.p) * sp.energy_drop) < 1e-12);

  CHECK_THROWS_AS(split_equal(z, ModelParams{2.5, 1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("split ground state has the two bracketed scalings") {
  // kappa = 1/(4 pi): the kernel convention under which the closed-form
  // branch-existence threshold beta0 is calibrated.
  const RadialGrid& g = nehari::test::default_grid();
  const double p = 3.0, lambda = 0.5;
  const SobolevConstants consts = sobolev_constants(p, g);
  const ThresholdReport th = compute_thresholds(p, lambda, 1.0, consts);
  const double beta = 1.2 * th.beta0;
  const ModelParams params{p, lambda, beta, 0.25 / M_PI};

  const GBetaResult gb = g_beta_profile(p, beta);
  const SolitonResult w = scalar_ground_state(p, gb.g_max, g);
  VecPair split{w.w, w.w};
  for (double& v : split.u.values) v *= std::sqrt(gb.s_beta);
  for (double& v : split.v.values) v *= std::sqrt(1.0 - gb.s_beta);

  const FiberCoeffs c = fiber_coeffs(split, params);
  const NehariRoots roots = nehari_times(c);
  REQUIRE(roots.count == 2);
  const double mid = std::pow(2.0 / (4.0 - p), 1.0 / (p - 2.0));
  CHECK(*roots.t_minus > 1.0);
  CHECK(*roots.t_minus < mid);
  CHECK(*roots.t_plus > mid);
  CHECK(roots.class_minus == NehariClass::Minus);
  CHECK(roots.class_plus == NehariClass::Plus);

  // The larger scaling realizes the ray infimum, strictly negative.
  const double j_plus = fiber_h(c, *roots.t_plus);
  CHECK(j_plus < 0.0);
  double scan_min = 0.0;
  for (int k = 1; k <= 4000; ++k) scan_min = std::min(scan_min, fiber_h(c, 8.0 * k / 4000.0));
  CHECK(j_plus <= scan_min + 1e-9 * std::abs(scan_min));

  // Class/region consistency at the criterion parameters of the norm-split
  // sub-manifolds (kappa = 1 regime with ample threshold margins).
  const double p2 = 3.5, lambda2 = 0.1;
  const SobolevConstants consts2 = sobolev_constants(p2, g);
  const ThresholdReport th2 = compute_thresholds(p2, lambda2, 1.0, consts2);
  const double beta2 = 1.2 * th2.beta_thresh;
  const ModelParams params2{p2, lambda2, beta2, 1.0};
  const GBetaResult gb2 = g_beta_profile(p2, beta2);
  const SolitonResult w2 = scalar_ground_state(p2, gb2.g_max, g);
  VecPair split2{w2.w, w2.w};
  for (double& v : split2.u.values) v *= std::sqrt(gb2.s_beta);
  for (double& v : split2.v.values) v *= std::sqrt(1.0 - gb2.s_beta);
  const VecPair lo = project_to_nehari(split2, params2, NehariClass::Minus);
  const VecPair hi = project_to_nehari(split2, params2, NehariClass::Plus);
  CHECK(region_of(lo, params2, consts2) == Region::Region1);
  CHECK(classify(lo, params2) == NehariClass::Minus);
  CHECK(region_of(hi, params2, consts2) == Region::Region2);
  CHECK(classify(hi, params2) == NehariClass::Plus);
  CHECK(total_energy(hi, params2).total < 0.0);

  // Far above the cap: outside the split regions.
  VecPair big = lo;
  for (double& v : big.u.values) v *= 40.0;
  for (double& v : big.v.values) v *= 40.0;
  CHECK(region_of(big, params2, consts2) == Region::Outside);
}
