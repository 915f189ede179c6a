#ifndef NEHARI_VERIFY_HPP
#define NEHARI_VERIFY_HPP

#include <string>
#include <vector>

namespace nehari {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Exact-relation checks: quadrature moments, norm homogeneity, energy
/// breakdown and ray-map consistency, the stationarity pairing, the scaling
/// linear system, closed-form roots, split two-path agreement, far field.
std::vector<CheckResult> verify_identities(unsigned long long seed);

/// Order checks: Coulomb positivity and monotonicity, the Poisson-energy
/// inequality, the coercivity bound, coupling-gain and threshold ordering
/// over parameter grids.
std::vector<CheckResult> verify_inequalities(unsigned long long seed);

}  // namespace nehari

#endif
