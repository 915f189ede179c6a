#include "nehari/fibering.hpp"

#include <cmath>
#include <string>

namespace nehari {

namespace {

double g_beta_deriv(double p, double beta, double s) {
  const double ph = p / 2.0, pq = p / 4.0;
  const double t = 1.0 - s;
  return ph * (std::pow(s, ph - 1.0) - std::pow(t, ph - 1.0)) +
         2.0 * beta * pq *
             (std::pow(s, pq - 1.0) * std::pow(t, pq) -
              std::pow(s, pq) * std::pow(t, pq - 1.0));
}

}  // namespace

double g_beta_value(double p, double beta, double s) {
  const double t = 1.0 - s;
  return std::pow(s, p / 2.0) + std::pow(t, p / 2.0) +
         2.0 * beta * std::pow(s, p / 4.0) * std::pow(t, p / 4.0);
}

namespace {

// g(s) - 1 without cancellation: for beta -> 0 the interior maximizer sinks
// to s ~ beta^{4/(4-p)} where the gain can be far below machine epsilon
// relative to 1, so the excess is the quantity to carry.
double g_beta_excess(double p, double beta, double s) {
  const double sh = std::pow(s, p / 2.0);
  const double th = std::expm1(0.5 * p * std::log1p(-s));  // (1-s)^{p/2} - 1
  const double cross =
      2.0 * beta * std::pow(s, p / 4.0) * std::exp(0.25 * p * std::log1p(-s));
  return sh + th + cross;
}

}  // namespace

GBetaResult g_beta_profile(double p, double beta) {
  if (!(p > 2.0 && p < 4.0)) throw std::invalid_argument("g_beta_profile: p out of (2,4)");
  if (!(beta >= 0.0)) throw std::invalid_argument("g_beta_profile: beta must be >= 0");
  if (beta == 0.0) return {0.0, 1.0, 0.0};

  // The cross term has infinite slope at s = 0+, so g always rises off the
  // endpoint; by symmetry it is enough to look into (0, 1/2].  Locate the
  // first downward sign change of g' on a logarithmic scan and bisect it.
  const double lo_log = std::log(1e-250), hi_log = std::log(0.5);
  const int m = 800;
  double s_star = 0.5;
  double prev = lo_log;
  bool bracketed = false;
  for (int k = 1; k <= m; ++k) {
    const double cur = lo_log + (hi_log - lo_log) * k / m;
    if (g_beta_deriv(p, beta, std::exp(cur)) < 0.0) {
      double a = prev, b = cur;
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double mid = 0.5 * (a + b);
        (g_beta_deriv(p, beta, std::exp(mid)) > 0.0 ? a : b) = mid;
      }
      s_star = std::exp(0.5 * (a + b));
      bracketed = true;
      break;
    }
    prev = cur;
  }

  const double half_excess = g_beta_excess(p, beta, 0.5);
  const double star_excess = bracketed ? g_beta_excess(p, beta, s_star) : half_excess;
  GBetaResult out;
  if (!bracketed || half_excess >= star_excess) {
    out.s_beta = 0.5;
    out.g_excess = half_excess;
  } else {
    out.s_beta = s_star;
    out.g_excess = star_excess;
  }
  out.g_max = 1.0 + out.g_excess;
  return out;
}

FiberCoeffs fiber_coeffs(const VecPair& pair, const ModelParams& params) {
  if (!nontrivial(pair)) throw std::invalid_argument("fiber_coeffs: trivial pair");
  FiberCoeffs c;
  c.A = h1_norm_sq(pair.u) + h1_norm_sq(pair.v);
  c.B = hartree_energy(pair, params.kappa);
  c.C = coupling_integral(pair, params.p, params.beta);
  c.p = params.p;
  c.lambda = params.lambda;
  return c;
}

double fiber_h(const FiberCoeffs& c, double t) {
  return 0.5 * t * t * c.A + 0.25 * c.lambda * c.B * t * t * t * t -
         std::pow(t, c.p) * c.C / c.p;
}

double fiber_hp(const FiberCoeffs& c, double t) {
  return t * c.A + c.lambda * c.B * t * t * t - std::pow(t, c.p - 1.0) * c.C;
}

double fiber_hpp(const FiberCoeffs& c, double t) {
  return c.A + 3.0 * c.lambda * c.B * t * t - (c.p - 1.0) * std::pow(t, c.p - 2.0) * c.C;
}

double nehari_defect(const FiberCoeffs& c) { return c.A + c.lambda * c.B - c.C; }

namespace {

// phi(t) = A + lambda B t^2 - C t^{p-2}; roots of phi are the stationary
// scalings, and sign(phi'(root)) classifies them.
struct Phi {
  double A, lB, C, p;
  double operator()(double t) const { return A + lB * t * t - C * std::pow(t, p - 2.0); }
  double deriv(double t) const {
    return 2.0 * lB * t - (p - 2.0) * C * std::pow(t, p - 3.0);
  }
};

double refine_root(const Phi& phi, double lo, double hi) {
  // phi(lo), phi(hi) have opposite signs; bisection plus Newton polish.
  double flo = phi(lo);
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phi(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-16 * hi) break;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    const double d = phi.deriv(t);
    if (d == 0.0) break;
    const double step = phi(t) / d;
    const double next = t - step;
    if (next > lo * 0.5 && next < hi * 2.0) t = next;
  }
  return t;
}

}  // namespace

NehariRoots nehari_times(const FiberCoeffs& c) {
  if (!(c.A > 0.0)) throw std::invalid_argument("nehari_times: A must be positive");
  NehariRoots roots;
  const double lB = c.lambda * c.B;
  const double tol = 1e-10 * c.A;
  const Phi phi{c.A, lB, c.C, c.p};

  if (c.C <= 0.0) return roots;  // phi >= A > 0 everywhere

  if (lB <= 0.0) {
    // Single stationary scaling on a strictly decreasing phi: a maximum of h.
    roots.count = 1;
    roots.t_minus = std::pow(c.A / c.C, 1.0 / (c.p - 2.0));
    roots.class_minus = NehariClass::Minus;
    return roots;
  }

  const double t_star = std::pow((c.p - 2.0) * c.C / (2.0 * lB), 1.0 / (4.0 - c.p));
  const double m = phi(t_star);
  if (m > tol) return roots;
  if (m >= -tol) {
    roots.count = 1;
    roots.t_minus = t_star;
    roots.t_plus = t_star;
    roots.class_minus = NehariClass::Zero;
    roots.class_plus = NehariClass::Zero;
    return roots;
  }

  double lo = t_star;
  while (phi(lo) < 0.0) lo *= 0.5;
  double hi = t_star;
  while (phi(hi) < 0.0) hi *= 2.0;
  roots.count = 2;
  roots.t_minus = refine_root(phi, lo, t_star);
  roots.t_plus = refine_root(phi, t_star, hi);
  roots.class_minus = NehariClass::Minus;
  roots.class_plus = NehariClass::Plus;

  if (c.p == 3.0) {
    // Quadratic closed form guards the bracketing solve.
    const double disc = c.C * c.C - 4.0 * lB * c.A;
    const double tm = (c.C - std::sqrt(disc)) / (2.0 * lB);
    const double tp = (c.C + std::sqrt(disc)) / (2.0 * lB);
    if (std::abs(tm - *roots.t_minus) > 1e-11 * tp ||
        std::abs(tp - *roots.t_plus) > 1e-11 * tp)
      throw std::logic_error("nehari_times: root solve disagrees with p=3 closed form");
    roots.t_minus = tm;
    roots.t_plus = tp;
  }
  return roots;
}

NehariClass classify(const VecPair& pair, const ModelParams& params, double manifold_tol) {
  const FiberCoeffs c = fiber_coeffs(pair, params);
  const double defect = nehari_defect(c);
  if (std::abs(defect) > manifold_tol * c.A)
    throw std::invalid_argument("classify: pair off the stationary set, defect = " +
                                std::to_string(defect));
  const double s1 = -(c.p - 2.0) * c.A + c.lambda * (4.0 - c.p) * c.B;
  const double s2 = -2.0 * c.A + (4.0 - c.p) * c.C;
  const double band = 1e-10 * c.A + 2.0 * (4.0 - c.p) * std::abs(defect);
  auto to_class = [band](double s) {
    if (s < -band) return NehariClass::Minus;
    if (s > band) return NehariClass::Plus;
    return NehariClass::Zero;
  };
  const NehariClass k1 = to_class(s1), k2 = to_class(s2);
  if (k1 != NehariClass::Zero && k2 != NehariClass::Zero && k1 != k2)
    throw std::logic_error("classify: the two curvature expressions disagree in sign");
  return k1 != NehariClass::Zero ? k1 : k2;
}

VecPair project_to_nehari(const VecPair& pair, const ModelParams& params,
                          NehariClass branch) {
  const FiberCoeffs c = fiber_coeffs(pair, params);
  const NehariRoots roots = nehari_times(c);
  std::optional<double> t;
  if (branch == NehariClass::Minus && roots.t_minus &&
      roots.class_minus == NehariClass::Minus)
    t = roots.t_minus;
  if (branch == NehariClass::Plus && roots.t_plus && roots.class_plus == NehariClass::Plus)
    t = roots.t_plus;
  if (!t)
    throw BranchAbsentError("project_to_nehari: requested branch absent", roots);
  VecPair out = pair;
  for (double& v : out.u.values) v *= *t;
  for (double& v : out.v.values) v *= *t;
  return out;
}

SplitResult split_equal(const RadialFn& z, const ModelParams& params) {
  if (!(params.beta > 0.0))
    throw std::invalid_argument("split_equal: a strict drop needs beta > 0");
  const GBetaResult gb = g_beta_profile(params.p, params.beta);
  SplitResult out;
  out.s_z = gb.s_beta;
  out.energy_drop = gb.g_excess / params.p * lp_norm_pow(z, params.p);
  if (!(out.energy_drop > 0.0))
    throw std::invalid_argument("split_equal: nontrivial z required");
  return out;
}

Region region_of(const VecPair& pair, const ModelParams& params,
                 const SobolevConstants& consts) {
  const double p = params.p, lambda = params.lambda;
  const double prod = consts.S_bar * consts.S_bar * std::pow(consts.S_125, 4.0);
  const double cap = (p - 2.0) * (p - 2.0) * prod / (4.0 * lambda * p * (4.0 - p));
  const double radius_sq = (p - 2.0) * prod / (lambda * (4.0 - p));
  const double J = total_energy(pair, params).total;
  if (!(J < cap)) return Region::Outside;
  const double norm_sq = h1_norm_sq(pair.u) + h1_norm_sq(pair.v);
  if (norm_sq < radius_sq) return Region::Region1;
  if (norm_sq > radius_sq) return Region::Region2;
  return Region::Outside;
}

}  // namespace nehari
