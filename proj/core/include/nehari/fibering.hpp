#ifndef NEHARI_FIBERING_HPP
#define NEHARI_FIBERING_HPP

#include <optional>
#include <stdexcept>

#include "nehari/energy.hpp"
#include "nehari/grid.hpp"
#include "nehari/soliton.hpp"

namespace nehari {

/// Coefficients of the one-dimensional ray map
///   h(t) = (t^2/2) A + (lambda t^4/4) B - (t^p/p) C,
/// with A = ||(u,v)||_H^2, B = int phi rho, C the coupling integral.
struct FiberCoeffs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double p = 0.0;
  double lambda = 0.0;
};

enum class NehariClass { Minus, Zero, Plus };

/// Positive stationary scalings of the ray map, i.e. roots of
/// A + lambda B t^2 - C t^{p-2}.  With two roots the smaller is a local
/// maximum of h (Minus) and the larger a local minimum (Plus); a single
/// tangent root is Zero, and a single root with lambda B = 0 is Minus.
struct NehariRoots {
  int count = 0;
  std::optional<double> t_minus;
  std::optional<double> t_plus;
  NehariClass class_minus = NehariClass::Zero;
  NehariClass class_plus = NehariClass::Zero;
};

/// Thrown when a requested stationary branch does not exist.
class BranchAbsentError : public std::runtime_error {
 public:
  BranchAbsentError(const std::string& what, NehariRoots roots)
      : std::runtime_error(what), roots_(roots) {}
  const NehariRoots& roots() const { return roots_; }

 private:
  NehariRoots roots_;
};

/// Result of the equal-profile split (sqrt(s) z, sqrt(1-s) z).
struct SplitResult {
  double s_z = 0.0;        // in (0,1)
  double energy_drop = 0.0;  // J(z,0) - J(split) = ((g_max-1)/p) int |z|^p > 0
};

enum class Region { Region1, Region2, Outside };

/// Maximizes g(s) = s^{p/2} + (1-s)^{p/2} + 2 beta s^{p/4} (1-s)^{p/4} on
/// [0,1].  Returns the maximizer and the maximum; for beta >= (p-2)/2 the
/// maximizer is exactly 1/2, and g_max > 1 whenever beta > 0.
struct GBetaResult {
  double s_beta = 0.0;
  double g_max = 1.0;    // 1 + g_excess (saturates at 1 when the gain underflows)
  double g_excess = 0.0; // g_max - 1 carried at full precision
};
GBetaResult g_beta_profile(double p, double beta);

double g_beta_value(double p, double beta, double s);

FiberCoeffs fiber_coeffs(const VecPair& pair, const ModelParams& params);

double fiber_h(const FiberCoeffs& c, double t);
double fiber_hp(const FiberCoeffs& c, double t);
double fiber_hpp(const FiberCoeffs& c, double t);

/// Stationary-scaling defect A + lambda B t^2 - C t^{p-2} at t = 1.
double nehari_defect(const FiberCoeffs& c);

NehariRoots nehari_times(const FiberCoeffs& c);

/// Sign of h''(1) for a pair already satisfying |A + lambda B - C| <= tol*A
/// (default tol 1e-8), cross-checked through the two equivalent on-manifold
/// expressions -(p-2)A + lambda(4-p)B and -2A + (4-p)C.  Off-manifold input
/// throws with the defect in the message.
NehariClass classify(const VecPair& pair, const ModelParams& params,
                     double manifold_tol = 1e-8);

/// Scales the pair onto the requested stationary branch; the output defect
/// is below 1e-10 * A.  Throws BranchAbsentError when the branch is missing.
VecPair project_to_nehari(const VecPair& pair, const ModelParams& params,
                          NehariClass branch);

/// Equal-profile split with the optimal mixing weight; requires beta > 0
/// and a nontrivial z.  The returned drop matches the direct two-path
/// evaluation of the energies to rounding.
SplitResult split_equal(const RadialFn& z, const ModelParams& params);

/// Membership in the norm-split sub-manifold regions below the energy cap
/// (p-2)^2 Sbar^2 S_{12/5}^4 / (4 lambda p (4-p)): Region1 for small H-norm,
/// Region2 for large, Outside above the cap.
Region region_of(const VecPair& pair, const ModelParams& params,
                 const SobolevConstants& consts);

}  // namespace nehari

#endif
