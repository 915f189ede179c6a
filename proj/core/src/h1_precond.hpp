#ifndef NEHARI_SRC_H1_PRECOND_HPP
#define NEHARI_SRC_H1_PRECOND_HPP

#include <vector>

#include "nehari/grid.hpp"

namespace nehari::detail {

// Solves (stiffness + mass) d = 4*pi * w .* rhs by the Thomas algorithm,
// i.e. maps a cell-volume residual to its H^1 Riesz representative.  The
// operator is the SPD tridiagonal form behind h1_norm_sq, so steps along d
// stay well scaled on strongly graded grids.
inline std::vector<double> h1_solve(const RadialGrid& g, const std::vector<double>& rhs) {
  const std::size_t n = g.n;
  std::vector<double> diag(n), upper(n - 1), b(n);
  const double four_pi = 4.0 * M_PI;
  for (std::size_t i = 0; i < n; ++i) {
    double d = g.weights[i];
    if (i > 0) d += g.edge_coeff[i - 1];
    if (i + 1 < n) d += g.edge_coeff[i];
    diag[i] = four_pi * d;
    b[i] = four_pi * g.weights[i] * rhs[i];
  }
  for (std::size_t i = 0; i + 1 < n; ++i) upper[i] = -four_pi * g.edge_coeff[i];

  // forward elimination (symmetric tridiagonal)
  for (std::size_t i = 1; i < n; ++i) {
    const double m = upper[i - 1] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    b[i] -= m * b[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = b[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = (b[i] - upper[i] * x[i + 1]) / diag[i];
  return x;
}

}  // namespace nehari::detail

#endif
