#ifndef NEHARI_GRID_HPP
#define NEHARI_GRID_HPP

#include <cstddef>
#include <vector>

namespace nehari {

enum class GridScheme { Uniform, Log };

/// Radial quadrature grid on (0, r_max].
///
/// Integrals over R^3 of radial functions are reduced to
///   int f dx = 4*pi * int_0^{r_max} f(r) r^2 dr  ~=  4*pi * sum_i w[i] f(r_i).
/// The weights fold the r^2 Jacobian and are exact for piecewise-quadratic
/// integrands (segment-pair rule with exact polynomial moments), so monomials
/// f = 1, r, r^2 integrate to machine accuracy on any node layout.
///
/// edge_coeff[i] carries the per-segment factor used by the kinetic form:
///   int u'(r)^2 r^2 dr ~= sum_i edge_coeff[i] * (u[i+1]-u[i])^2,
/// with edge_coeff[i] = (r_{i+1}^3 - r_i^3) / (3 * (r_{i+1}-r_i)^2).
/// This is the quadratic form whose exact gradient is the conservative
/// three-point radial Laplacian stencil, with u'(0) = 0 built in.
struct RadialGrid {
  std::size_t n = 0;
  double r_max = 0.0;
  GridScheme scheme = GridScheme::Uniform;
  std::vector<double> nodes;       // strictly increasing, nodes[0] > 0, back() == r_max
  std::vector<double> weights;     // positive; sum == r_max^3/3 to ~1e-12 relative
  std::vector<double> edge_coeff;  // size n-1
};

/// Sampled radial profile u(r) on a shared grid.
struct RadialFn {
  const RadialGrid* grid = nullptr;
  std::vector<double> values;

  RadialFn() = default;
  RadialFn(const RadialGrid& g, std::vector<double> v) : grid(&g), values(std::move(v)) {}
  explicit RadialFn(const RadialGrid& g) : grid(&g), values(g.n, 0.0) {}
};

/// Ordered pair (u, v) of radial profiles on one grid; the system unknown.
struct VecPair {
  RadialFn u;
  RadialFn v;
};

/// Builds a grid with n >= 64 nodes on (0, r_max].  The log scheme places
/// nodes geometrically with r_1 = 1e-4 * r_max, clustering them near the
/// origin.  Throws std::invalid_argument on unusable parameters and
/// std::runtime_error if the weight construction loses positivity.
RadialGrid make_grid(std::size_t n, double r_max, GridScheme scheme);

/// 4*pi * sum w_i s_i; linear in the samples.  Length mismatch throws.
double integrate(const RadialGrid& grid, const std::vector<double>& samples);

/// int |grad u|^2 dx via the edge form (no boundary term at r_max).
double kinetic_sq(const RadialFn& u);

/// int (|grad u|^2 + u^2) dx; zero iff u == 0.
double h1_norm_sq(const RadialFn& u);

/// int |u|^q dx, q >= 1.
double lp_norm_pow(const RadialFn& u, double q);

/// max_i r_i |u(r_i)| over nodes below r_max, divided by ||u||_{H^1}.
/// Scale-invariant decay diagnostic; rejects the zero profile.
double strauss_ratio(const RadialFn& u);

/// true iff max(||u||_L2, ||v||_L2) > 0.
bool nontrivial(const VecPair& pair);

}  // namespace nehari

#endif
