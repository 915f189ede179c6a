#ifndef NEHARI_LAMBDA_MAX_HPP
#define NEHARI_LAMBDA_MAX_HPP

#include <vector>

#include "nehari/energy.hpp"
#include "nehari/grid.hpp"

namespace nehari {

enum class QuotientVariant { Lambda, LambdaBar };

struct QuotientConfig {
  int n_seeds = 8;
  int max_iters = 600;
  double stat_tol = 2e-5;  // first-order residual target
  double kappa = 1.0;
  unsigned long long seed = 1;
  int jobs = 1;  // worker threads across the seed set; result is job-count independent
  std::vector<VecPair> extra_seeds;  // appended to the generated seed set
};

/// Outcome of the quotient maximization.  first_order_residual is the
/// scale-normalized gradient size ||grad Q||_{L2} * ||(u,v)||_{L2} / Q at the
/// returned maximizer; the maximizer is scale-optimal along its own ray.
struct QuotientResult {
  double value = 0.0;
  VecPair maximizer;
  int iterations = 0;
  double first_order_residual = 0.0;
  unsigned long long seed = 0;
};

/// Multi-start preconditioned ascent on
///   Q(u,v) = [ (1/p) int F_beta - ||(u,v)||_H^2 / 2 ] / int phi rho     (Lambda)
///   Q(u,v) = [ int F_beta - ||(u,v)||_H^2 ]          / int phi rho     (LambdaBar)
/// over the grid, with the one-dimensional scaling optimized in closed form
/// after every step.  Seeds: config.n_seeds random pairs, the optimally split
/// scalar ground state, and any extra_seeds.  Requires 2 < p < 3.
QuotientResult maximize_quotient(double beta, double p, QuotientVariant variant,
                                 const RadialGrid& grid, const QuotientConfig& config);

/// Evaluates the scale-optimal quotient value of one pair (no ascent).
double quotient_at(const VecPair& pair, double beta, double p, QuotientVariant variant,
                   double kappa);

/// True iff ||(u,v)||_H^2 + lambda int phi rho - int F_beta > 0 on `trials`
/// random nontrivial pairs plus every pair in `candidates`; a strictly
/// positive stationarity defect everywhere rules out nontrivial critical
/// points among the sampled configurations.
bool nonexistence_check(double lambda, double beta, double p, const RadialGrid& grid,
                        int trials, unsigned long long seed, double kappa,
                        const std::vector<VecPair>& candidates = {});

}  // namespace nehari

#endif
