// Command-line front end: solves, threshold reports, ray-map scans, quotient
// maximization, multibump runs, and the verification suites.  Emits JSON (17
// significant digits, byte-stable for fixed argv + seed) and CSV tables.
//
// Exit codes: 0 success, 1 internal error, 2 flag/precondition error,
// 3 non-convergence (a report is still emitted).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nehari/fibering.hpp"
#include "nehari/json_out.hpp"
#include "nehari/lambda_max.hpp"
#include "nehari/multibump.hpp"
#include "nehari/solver.hpp"
#include "nehari/thresholds.hpp"
#include "nehari/verify.hpp"

#ifndef NEHARI_BUILD_ID
#define NEHARI_BUILD_ID "v0.1.0"
#endif

namespace {

using namespace nehari;

struct GridOptions {
  std::size_t n = 4096;
  double r_max = 30.0;
  std::string scheme = "log";
};

void add_grid_flags(CLI::App* cmd, GridOptions& g) {
  if (const char* env = std::getenv("NEHARI_LAB_GRID_N")) g.n = std::strtoul(env, nullptr, 10);
  cmd->add_option("--grid-n", g.n, "node count (>= 64)");
  cmd->add_option("--grid-rmax", g.r_max, "outer radius");
  cmd->add_option("--grid-scheme", g.scheme, "uniform|log")
      ->check(CLI::IsMember({"uniform", "log"}));
}

RadialGrid build_grid(const GridOptions& g) {
  return make_grid(g.n, g.r_max, g.scheme == "log" ? GridScheme::Log : GridScheme::Uniform);
}

Json grid_json(const GridOptions& g) {
  Json j = Json::object();
  j.set("n", Json::integer(static_cast<long long>(g.n)));
  j.set("r_max", Json::number(g.r_max));
  j.set("scheme", Json::string(g.scheme));
  return j;
}

Json header_json(const GridOptions& g, double kappa) {
  Json j = Json::object();
  j.set("schema_version", Json::string("1"));
  j.set("build", Json::string(NEHARI_BUILD_ID));
  j.set("grid", grid_json(g));
  j.set("kappa", Json::number(kappa));
  return j;
}

Json values_json(const RadialFn& f) {
  Json arr = Json::array();
  for (double v : f.values) arr.push(Json::number(v));
  return arr;
}

const char* class_name(NehariClass c) {
  switch (c) {
    case NehariClass::Minus: return "Minus";
    case NehariClass::Plus: return "Plus";
    default: return "Zero";
  }
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::TrivialLimit: return "TrivialLimit";
    case SolveStatus::BranchLost: return "BranchLost";
    default: return "MaxIters";
  }
}

const char* cert_name(CertificateSource s) {
  switch (s) {
    case CertificateSource::T6: return "t6";
    case CertificateSource::G3: return "g3";
    default: return "none";
  }
}

Json report_json(const SolveReport& rep, const std::string& mode, bool with_values) {
  Json j = Json::object();
  j.set("mode", Json::string(mode));
  Json pair = Json::object();
  if (with_values) {
    pair.set("u", values_json(rep.pair.u));
    pair.set("v", values_json(rep.pair.v));
  }
  pair.set("u_l2", Json::number(std::sqrt(lp_norm_pow(rep.pair.u, 2.0))));
  pair.set("v_l2", Json::number(std::sqrt(lp_norm_pow(rep.pair.v, 2.0))));
  j.set("pair", std::move(pair));
  Json bd = Json::object();
  bd.set("kinetic", Json::number(rep.breakdown.kinetic));
  bd.set("mass", Json::number(rep.breakdown.mass));
  bd.set("hartree", Json::number(rep.breakdown.hartree));
  bd.set("coupling", Json::number(rep.breakdown.coupling));
  bd.set("total", Json::number(rep.breakdown.total));
  j.set("breakdown", std::move(bd));
  j.set("residual", Json::number(rep.residual));
  j.set("nehari_class", Json::string(class_name(rep.nehari_class)));
  Json poho = Json::object();
  poho.set("z1", Json::number(rep.poho.z1));
  poho.set("z2", Json::number(rep.poho.z2));
  poho.set("z3", Json::number(rep.poho.z3));
  poho.set("z4", Json::number(rep.poho.z4));
  poho.set("theta", Json::number(rep.poho.theta));
  poho.set("poho_residual", Json::number(rep.poho.poho_residual));
  j.set("poho", std::move(poho));
  j.set("vectorial", Json::boolean(rep.vectorial));
  j.set("positive", Json::boolean(rep.positive));
  j.set("converged", Json::boolean(rep.converged));
  j.set("status", Json::string(status_name(rep.status)));
  j.set("certified_ground_state", Json::boolean(rep.certified_ground_state));
  j.set("certificate_source", Json::string(cert_name(rep.certificate_source)));
  j.set("iterations", Json::integer(rep.iterations));
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(out_path);
    os << text << "\n";
  }
}

std::string csv_row_end() { return "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for a doubly coupled Schrodinger-Poisson system"};
  app.require_subcommand(1);

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "descend to critical points");
  GridOptions solve_grid;
  ModelParams sp;
  std::string solve_mode = "both", solve_out;
  SolverConfig scfg;
  bool no_values = false;
  solve->add_option("--p", sp.p, "power, in (2,4)")->required();
  solve->add_option("--lambda", sp.lambda, "Coulomb coupling >= 0")->required();
  solve->add_option("--beta", sp.beta, "cooperative coupling >= 0")->required();
  solve->add_option("--kappa", sp.kappa, "kernel prefactor (1 or 1/(4 pi))");
  solve->add_option("--mode", solve_mode, "global|nehari-minus|both")
      ->check(CLI::IsMember({"global", "nehari-minus", "both"}));
  solve->add_option("--seed", scfg.seed, "rng seed for fallback starts");
  solve->add_option("--tol", scfg.tol_residual, "residual target");
  solve->add_option("--max-iters", scfg.max_iters, "iteration cap");
  solve->add_option("--out", solve_out, "write JSON here instead of stdout");
  solve->add_flag("--no-values", no_values, "omit the sampled profiles from the JSON");
  add_grid_flags(solve, solve_grid);

  // ---- thresholds ----
  auto* thr = app.add_subcommand("thresholds", "closed-form parameter thresholds");
  GridOptions thr_grid;
  double thr_p = 2.5, thr_lambda = 1.0, thr_beta = 0.0;
  std::string thr_out;
  thr->add_option("--p", thr_p)->required();
  thr->add_option("--lambda", thr_lambda)->required();
  thr->add_option("--beta", thr_beta)->required();
  thr->add_option("--out", thr_out);
  add_grid_flags(thr, thr_grid);

  // ---- fibering ----
  auto* fib = app.add_subcommand("fibering", "ray-map coefficients, roots and samples");
  GridOptions fib_grid;
  ModelParams fp;
  std::string fib_seed_pair = "split-soliton", fib_out, fib_csv;
  std::vector<double> fib_coeffs_direct;
  double fib_tmax = 4.0;
  fib->add_option("--p", fp.p)->required();
  fib->add_option("--lambda", fp.lambda);
  fib->add_option("--beta", fp.beta);
  fib->add_option("--kappa", fp.kappa);
  fib->add_option("--seed-pair", fib_seed_pair, "split-soliton");
  fib->add_option("--coeffs", fib_coeffs_direct, "direct A,B,C mode")->delimiter(',');
  fib->add_option("--csv", fib_csv, "write t,h,hp,hpp samples here");
  fib->add_option("--t-max", fib_tmax, "sample range for the CSV");
  fib->add_option("--out", fib_out);
  add_grid_flags(fib, fib_grid);

  // ---- lambda ----
  auto* lam = app.add_subcommand("lambda", "quotient maximization");
  GridOptions lam_grid;
  double lam_p = 2.5, lam_beta = 0.0, lam_kappa = 1.0;
  std::string lam_variant = "Lambda", lam_out;
  QuotientConfig qcfg;
  lam->add_option("--p", lam_p)->required();
  lam->add_option("--beta", lam_beta)->required();
  lam->add_option("--variant", lam_variant)->check(CLI::IsMember({"Lambda", "LambdaBar"}));
  lam->add_option("--kappa", lam_kappa);
  lam->add_option("--seeds", qcfg.n_seeds, "number of random starts");
  lam->add_option("--seed", qcfg.seed, "rng seed");
  lam->add_option("--jobs", qcfg.jobs, "worker threads across the starts")
      ->check(CLI::PositiveNumber);
  lam->add_option("--out", lam_out);
  add_grid_flags(lam, lam_grid);

  // ---- multibump ----
  auto* mb = app.add_subcommand("multibump", "divergence construction table");
  GridOptions mb_grid;
  ModelParams mp;
  double mb_r0 = 3.5;
  std::vector<int> mb_ns{1, 2, 4, 8};
  std::string mb_out;
  mb->add_option("--p", mp.p)->required();
  mb->add_option("--lambda", mp.lambda)->required();
  mb->add_option("--beta", mp.beta)->required();
  mb->add_option("--kappa", mp.kappa);
  mb->add_option("--R0", mb_r0, "truncation radius");
  mb->add_option("--N-list", mb_ns, "bump counts")->delimiter(',');
  mb->add_option("--out", mb_out);
  add_grid_flags(mb, mb_grid);

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "run the invariant suites");
  std::string ver_suite = "all", ver_out;
  unsigned long long ver_seed = 1;
  ver->add_option("--suite", ver_suite)->check(CLI::IsMember({"identities", "inequalities", "all"}));
  ver->add_option("--seed", ver_seed);
  ver->add_option("--out", ver_out, "write the JSON detail here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      validate_params(sp);
      const RadialGrid grid = build_grid(solve_grid);
      const SobolevConstants consts = sobolev_constants(sp.p, grid);
      Json root = header_json(solve_grid, sp.kappa);
      root.set("command", Json::string("solve"));
      Json reports = Json::array();
      bool all_converged = true;
      if (solve_mode == "global" || solve_mode == "both") {
        SolveReport rep = minimize_global(sp, grid, scfg);
        if (rep.converged) rep = certify_ground_state(rep, sp, consts);
        all_converged = all_converged && rep.converged;
        reports.push(report_json(rep, "global", !no_values));
      }
      if (solve_mode == "nehari-minus" || solve_mode == "both") {
        const VecPair init = split_soliton_seed(sp, grid, NehariClass::Minus);
        SolveReport rep = minimize_nehari_minus(sp, grid, scfg, init);
        if (rep.converged) rep = certify_ground_state(rep, sp, consts);
        all_converged = all_converged && rep.converged;
        reports.push(report_json(rep, "nehari-minus", !no_values));
      }
      root.set("reports", std::move(reports));
      emit(root.dump(), solve_out);
      return all_converged ? 0 : 3;
    }

    if (thr->parsed()) {
      const RadialGrid grid = build_grid(thr_grid);
      const SobolevConstants consts = sobolev_constants(thr_p, grid);
      const ThresholdReport r = compute_thresholds(thr_p, thr_lambda, thr_beta, consts);
      GridOptions g = thr_grid;
      Json root = header_json(g, 1.0);
      root.set("command", Json::string("thresholds"));
      root.set("p", Json::number(thr_p));
      root.set("lambda", Json::number(thr_lambda));
      root.set("beta", Json::number(thr_beta));
      Json cs = Json::object();
      cs.set("S_p", Json::number(consts.S_p));
      cs.set("S_bar", Json::number(consts.S_bar));
      cs.set("S_125", Json::number(consts.S_125));
      root.set("constants", std::move(cs));
      root.set("rho_p", Json::number(r.rho_p));
      root.set("k_lambda", Json::number(r.k_lambda));
      root.set("beta0", Json::number(r.beta0));
      root.set("beta_thresh", Json::number(r.beta_thresh));
      root.set("lambda0", Json::number(r.lambda0));
      root.set("C_p_beta", Json::number(r.C_p_beta));
      root.set("C_beta", Json::number(r.C_beta));
      root.set("A_hls", Json::number(r.A_hls));
      root.set("region_radius", Json::number(r.region_radius));
      root.set("energy_cap_region", Json::number(r.energy_cap_region));
      root.set("energy_cap_ground", Json::number(r.energy_cap_ground));
      root.set("p_g3", Json::number(r.p_g3));
      emit(root.dump(), thr_out);
      return 0;
    }

    if (fib->parsed()) {
      FiberCoeffs c;
      GridOptions g = fib_grid;
      if (!fib_coeffs_direct.empty()) {
        if (fib_coeffs_direct.size() != 3)
          throw std::invalid_argument("fibering: --coeffs expects A,B,C");
        c = FiberCoeffs{fib_coeffs_direct[0], fib_coeffs_direct[1], fib_coeffs_direct[2],
                        fp.p, fp.lambda};
      } else {
        validate_params(fp);
        const RadialGrid grid = build_grid(g);
        const VecPair pair = split_soliton_seed(fp, grid, NehariClass::Minus);
        c = fiber_coeffs(pair, fp);
      }
      const NehariRoots roots = nehari_times(c);
      Json root = header_json(g, fp.kappa);
      root.set("command", Json::string("fibering"));
      root.set("A", Json::number(c.A));
      root.set("B", Json::number(c.B));
      root.set("C", Json::number(c.C));
      root.set("p", Json::number(c.p));
      root.set("lambda", Json::number(c.lambda));
      root.set("count", Json::integer(roots.count));
      if (roots.t_minus) {
        root.set("t_minus", Json::number(*roots.t_minus));
        root.set("class_minus", Json::string(class_name(roots.class_minus)));
      }
      if (roots.t_plus) {
        root.set("t_plus", Json::number(*roots.t_plus));
        root.set("class_plus", Json::string(class_name(roots.class_plus)));
      }
      emit(root.dump(), fib_out);
      if (!fib_csv.empty()) {
        std::ostringstream os;
        os << "t,h,hp,hpp" << csv_row_end();
        const int samples = 400;
        for (int k = 1; k <= samples; ++k) {
          const double t = fib_tmax * k / samples;
          os << format_double(t) << ',' << format_double(fiber_h(c, t)) << ','
             << format_double(fiber_hp(c, t)) << ',' << format_double(fiber_hpp(c, t))
             << csv_row_end();
        }
        std::ofstream f(fib_csv);
        f << os.str();
      }
      return 0;
    }

    if (lam->parsed()) {
      const RadialGrid grid = build_grid(lam_grid);
      qcfg.kappa = lam_kappa;
      const QuotientVariant variant =
          lam_variant == "Lambda" ? QuotientVariant::Lambda : QuotientVariant::LambdaBar;
      const QuotientResult r = maximize_quotient(lam_beta, lam_p, variant, grid, qcfg);
      Json root = header_json(lam_grid, lam_kappa);
      root.set("command", Json::string("lambda"));
      root.set("variant", Json::string(lam_variant));
      root.set("p", Json::number(lam_p));
      root.set("beta", Json::number(lam_beta));
      root.set("value", Json::number(r.value));
      root.set("iterations", Json::integer(r.iterations));
      root.set("first_order_residual", Json::number(r.first_order_residual));
      root.set("seed", Json::integer(static_cast<long long>(r.seed)));
      Json mx = Json::object();
      mx.set("u_l2", Json::number(std::sqrt(lp_norm_pow(r.maximizer.u, 2.0))));
      mx.set("v_l2", Json::number(std::sqrt(lp_norm_pow(r.maximizer.v, 2.0))));
      root.set("maximizer", std::move(mx));
      emit(root.dump(), lam_out);
      return 0;
    }

    if (mb->parsed()) {
      validate_params(mp);
      const RadialGrid grid = build_grid(mb_grid);
      const SobolevConstants consts = sobolev_constants(mp.p, grid);
      const BumpCurve curve = bump_curve(mp, mb_r0, mb_ns, consts, grid);
      std::ostringstream os;
      os << "N,spacing,t2,J,cross_term,bound" << csv_row_end();
      for (std::size_t k = 0; k < curve.Ns.size(); ++k) {
        os << curve.Ns[k] << ',' << format_double(curve.spacing[k]) << ','
           << format_double(curve.t2[k]) << ',' << format_double(curve.energies[k]) << ','
           << format_double(curve.cross_terms[k]) << ',' << format_double(curve.bounds[k])
           << csv_row_end();
      }
      emit(os.str(), mb_out);
      return 0;
    }

    if (ver->parsed()) {
      std::vector<CheckResult> results;
      if (ver_suite == "identities" || ver_suite == "all") {
        auto r = verify_identities(ver_seed);
        results.insert(results.end(), r.begin(), r.end());
      }
      if (ver_suite == "inequalities" || ver_suite == "all") {
        auto r = verify_inequalities(ver_seed);
        results.insert(results.end(), r.begin(), r.end());
      }
      bool all = true;
      Json detail = Json::array();
      for (const CheckResult& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
        Json j = Json::object();
        j.set("name", Json::string(r.name));
        j.set("pass", Json::boolean(r.pass));
        j.set("detail", Json::string(r.detail));
        detail.push(std::move(j));
      }
      std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
      Json root = Json::object();
      root.set("schema_version", Json::string("1"));
      root.set("build", Json::string(NEHARI_BUILD_ID));
      root.set("suite", Json::string(ver_suite));
      root.set("checks", std::move(detail));
      if (!ver_out.empty()) emit(root.dump(), ver_out);
      return all ? 0 : 3;
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "precondition violated: " << err.what() << "\n";
    return 2;
  } catch (const nehari::BranchAbsentError& err) {
    std::cerr << "no such stationary branch: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
