#ifndef NEHARI_SOLVER_HPP
#define NEHARI_SOLVER_HPP

#include "nehari/energy.hpp"
#include "nehari/fibering.hpp"
#include "nehari/soliton.hpp"

namespace nehari {

struct SolverConfig {
  int max_iters = 20000;
  double step0 = 1.0;          // initial line-search step
  double tol_residual = 1e-6;  // L2 Euler-Lagrange residual target
  double tol_energy = 1e-13;   // relative stall detection on J
  unsigned long long seed = 1;
};

enum class SolveStatus { Converged, MaxIters, TrivialLimit, BranchLost };
enum class CertificateSource { None, T6, G3 };

struct SolveReport {
  VecPair pair;
  EnergyBreakdown breakdown;
  double residual = 0.0;
  NehariClass nehari_class = NehariClass::Zero;
  PohozaevData poho;
  bool vectorial = false;
  bool positive = false;
  bool converged = false;
  SolveStatus status = SolveStatus::MaxIters;
  bool certified_ground_state = false;
  CertificateSource certificate_source = CertificateSource::None;
  int iterations = 0;
};

/// Unconstrained descent of J with preconditioned gradient steps, Armijo
/// backtracking and component-wise absolute values (J never increases under
/// |.|).  Seeding tries, in order: the optimally split scalar ground state at
/// its negative-energy ray scaling, ray-scanned random pairs, and a short
/// internal quotient ascent; when no negative-energy seed exists the flow
/// runs anyway and a collapse to the zero pair is reported as TrivialLimit.
/// Semitrivial limits with beta > 0 are re-split and re-descended.  Designed
/// for 2 < p < 3 (where J is coercive and bounded below).
SolveReport minimize_global(const ModelParams& params, const RadialGrid& grid,
                            const SolverConfig& config);

/// Constrained minimization on the ray-maximum branch: each trial step is
/// reprojected onto the smaller stationary scaling, J decreases monotonically
/// and the free residual is driven to tol.  `init` must carry that branch
/// (throws BranchAbsentError otherwise).  Loss of the branch during the run
/// returns the last valid iterate with status BranchLost.  Semitrivial
/// stationary limits with beta > 0 restart once from the split seed.
SolveReport minimize_nehari_minus(const ModelParams& params, const RadialGrid& grid,
                                  const SolverConfig& config, const VecPair& init);

/// Ground-state certification of a converged report:
///  - source G3 when p >= (1+sqrt(73))/3 (all nontrivial solutions are ray
///    maxima, so the branch minimum is the ground state);
///  - source T6 when 3 <= p < 4, lambda < lambda0 and the energy sits below
///    (p-2)/(2p) S_p^{2p/(p-2)};
///  - None otherwise.
SolveReport certify_ground_state(SolveReport report, const ModelParams& params,
                                 const SobolevConstants& consts);

/// The explicit branch seed (t_branch * sqrt(s) w, t_branch * sqrt(1-s) w)
/// built from the coupling-maximized scalar ground state; throws
/// BranchAbsentError when the requested scaling does not exist.
VecPair split_soliton_seed(const ModelParams& params, const RadialGrid& grid,
                           NehariClass branch);

}  // namespace nehari

#endif
