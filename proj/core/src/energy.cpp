#include "nehari/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace nehari {

namespace {

// |x|^{q-2} x, continuous at 0 for q > 2.
inline double pow_signed(double x, double q) {
  if (x == 0.0) return 0.0;
  return std::pow(std::abs(x), q - 2.0) * x;
}

std::vector<double> density(const VecPair& pair) {
  const RadialGrid& g = *pair.u.grid;
  std::vector<double> rho(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    rho[i] = pair.u.values[i] * pair.u.values[i] + pair.v.values[i] * pair.v.values[i];
  return rho;
}

// Exact gradient of the discrete kinetic form, divided by the cell volume:
// (-Lap u)_i = [ c_{i-1} (u_i - u_{i-1}) - c_i (u_{i+1} - u_i) ] / w_i.
void apply_neg_laplacian(const RadialGrid& g, const std::vector<double>& u,
                         std::vector<double>& out) {
  const std::size_t n = g.n;
  for (std::size_t i = 0; i < n; ++i) {
    double flux = 0.0;
    if (i > 0) flux += g.edge_coeff[i - 1] * (u[i] - u[i - 1]);
    if (i + 1 < n) flux -= g.edge_coeff[i] * (u[i + 1] - u[i]);
    out[i] = flux / g.weights[i];
  }
}

}  // namespace

void validate_params(const ModelParams& params, bool relaxed_p) {
  const double p_hi = relaxed_p ? 6.0 : 4.0;
  if (!(params.p > 2.0 && params.p < p_hi))
    throw std::invalid_argument("params: p out of range");
  if (!(params.lambda >= 0.0)) throw std::invalid_argument("params: lambda must be >= 0");
  if (!(params.beta >= 0.0)) throw std::invalid_argument("params: beta must be >= 0");
  if (!(params.kappa > 0.0)) throw std::invalid_argument("params: kappa must be positive");
}

double coupling_integral(const VecPair& pair, double p, double beta) {
  const RadialGrid& g = *pair.u.grid;
  const double ph = p / 2.0;
  long double acc = 0.0L;
  for (std::size_t i = 0; i < g.n; ++i) {
    const double au = std::abs(pair.u.values[i]), av = std::abs(pair.v.values[i]);
    const double f = std::pow(au, p) + std::pow(av, p) +
                     2.0 * beta * std::pow(au, ph) * std::pow(av, ph);
    acc += static_cast<long double>(g.weights[i]) * f;
  }
  return 4.0 * M_PI * static_cast<double>(acc);
}

EnergyBreakdown total_energy(const VecPair& pair, const ModelParams& params) {
  EnergyBreakdown e;
  e.kinetic = kinetic_sq(pair.u) + kinetic_sq(pair.v);
  e.mass = lp_norm_pow(pair.u, 2.0) + lp_norm_pow(pair.v, 2.0);
  e.hartree = hartree_energy(pair, params.kappa);
  e.coupling = coupling_integral(pair, params.p, params.beta);
  e.total = 0.5 * (e.kinetic + e.mass) + 0.25 * params.lambda * e.hartree -
            e.coupling / params.p;
  return e;
}

double scalar_energy(const RadialFn& z, const ModelParams& params) {
  VecPair pair{z, RadialFn(*z.grid)};
  return total_energy(pair, params).total;
}

ResidualPair el_residual(const VecPair& pair, const ModelParams& params) {
  const RadialGrid& g = *pair.u.grid;
  const double p = params.p, ph = p / 2.0;
  ResidualPair res;
  res.res_u = RadialFn(g);
  res.res_v = RadialFn(g);

  apply_neg_laplacian(g, pair.u.values, res.res_u.values);
  apply_neg_laplacian(g, pair.v.values, res.res_v.values);

  const std::vector<double> rho = density(pair);
  const CoulombField field = newton_potential(g, rho, params.kappa);

  for (std::size_t i = 0; i < g.n; ++i) {
    const double u = pair.u.values[i], v = pair.v.values[i];
    const double au = std::abs(u), av = std::abs(v);
    const double phi = field.phi.values[i];
    res.res_u.values[i] += u + params.lambda * phi * u - pow_signed(u, p) -
                           params.beta * std::pow(av, ph) * pow_signed(u, ph);
    res.res_v.values[i] += v + params.lambda * phi * v - pow_signed(v, p) -
                           params.beta * std::pow(au, ph) * pow_signed(v, ph);
  }

  long double acc = 0.0L;
  for (std::size_t i = 0; i < g.n; ++i)
    acc += static_cast<long double>(g.weights[i]) *
           (res.res_u.values[i] * res.res_u.values[i] +
            res.res_v.values[i] * res.res_v.values[i]);
  res.norm = std::sqrt(4.0 * M_PI * static_cast<double>(acc));
  return res;
}

double energy_directional(const ResidualPair& res, const VecPair& dir) {
  const RadialGrid& g = *res.res_u.grid;
  long double acc = 0.0L;
  for (std::size_t i = 0; i < g.n; ++i)
    acc += static_cast<long double>(g.weights[i]) *
           (res.res_u.values[i] * dir.u.values[i] + res.res_v.values[i] * dir.v.values[i]);
  return 4.0 * M_PI * static_cast<double>(acc);
}

PohozaevData pohozaev(const VecPair& pair, const ModelParams& params) {
  const EnergyBreakdown e = total_energy(pair, params);
  PohozaevData d;
  d.z1 = e.kinetic;
  d.z2 = e.mass;
  d.z3 = e.hartree;
  d.z4 = e.coupling;
  d.theta = e.total;
  d.poho_residual = std::abs(0.5 * d.z1 + 1.5 * d.z2 + 1.25 * params.lambda * d.z3 -
                             3.0 * d.z4 / params.p);
  return d;
}

std::array<double, 4> pohozaev_solution(double theta, double t, double p, double lambda) {
  const double s = theta / (p - 2.0);
  return {s * 3.0 * (p - 2.0) + t * (p - 2.0),
          s * (6.0 - p) - t * 2.0 * (p - 3.0),
          t * 2.0 * (p - 2.0) / lambda,
          s * 2.0 * p + t * p};
}

std::array<double, 3> pohozaev_system_gap(const std::array<double, 4>& z, double theta,
                                          double p, double lambda) {
  return {0.5 * z[0] + 0.5 * z[1] + 0.25 * lambda * z[2] - z[3] / p - theta,
          z[0] + z[1] + lambda * z[2] - z[3],
          0.5 * z[0] + 1.5 * z[1] + 1.25 * lambda * z[2] - 3.0 * z[3] / p};
}

double coercivity_lower_bound(const VecPair& pair, const ModelParams& params) {
  const RadialGrid& g = *pair.u.grid;
  const EnergyBreakdown e = total_energy(pair, params);
  const double a_h2 = e.kinetic + e.mass;
  const double c = 0.5 * std::sqrt(M_PI * params.kappa);
  const double croot = c * std::sqrt(params.lambda);
  long double acc = 0.0L;
  for (std::size_t i = 0; i < g.n; ++i) {
    const double au = std::abs(pair.u.values[i]), av = std::abs(pair.v.values[i]);
    const double fu = 0.25 * au * au + croot * au * au * au -
                      (1.0 + params.beta) / params.p * std::pow(au, params.p);
    const double fv = 0.25 * av * av + croot * av * av * av -
                      (1.0 + params.beta) / params.p * std::pow(av, params.p);
    acc += static_cast<long double>(g.weights[i]) * (fu + fv);
  }
  return 0.25 * a_h2 + 0.125 * params.lambda * e.hartree +
         4.0 * M_PI * static_cast<double>(acc);
}

}  // namespace nehari
