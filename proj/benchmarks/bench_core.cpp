#include <benchmark/benchmark.h>

#include <random>

#include "nehari/coulomb.hpp"
#include "nehari/energy.hpp"
#include "nehari/fibering.hpp"
#include "nehari/grid.hpp"
#include "nehari/sampling.hpp"

namespace {

using namespace nehari;

const RadialGrid& grid_of(std::int64_t n) {
  static std::map<std::int64_t, RadialGrid> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, make_grid(static_cast<std::size_t>(n), 30.0, GridScheme::Log)).first;
  return it->second;
}

VecPair pair_of(const RadialGrid& g) {
  std::mt19937_64 rng(42);
  return random_pair(g, rng);
}

void BM_newton_potential(benchmark::State& state) {
  const RadialGrid& g = grid_of(state.range(0));
  const VecPair pair = pair_of(g);
  std::vector<double> rho(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    rho[i] = pair.u.values[i] * pair.u.values[i] + pair.v.values[i] * pair.v.values[i];
  for (auto _ : state) benchmark::DoNotOptimize(newton_potential(g, rho, 1.0));
}
BENCHMARK(BM_newton_potential)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_hartree_energy(benchmark::State& state) {
  const RadialGrid& g = grid_of(state.range(0));
  const VecPair pair = pair_of(g);
  for (auto _ : state) benchmark::DoNotOptimize(hartree_energy(pair, 1.0));
}
BENCHMARK(BM_hartree_energy)->Arg(1024)->Arg(4096);

void BM_total_energy(benchmark::State& state) {
  const RadialGrid& g = grid_of(state.range(0));
  const VecPair pair = pair_of(g);
  const ModelParams params{2.5, 1.0, 1.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(total_energy(pair, params));
}
BENCHMARK(BM_total_energy)->Arg(1024)->Arg(4096);

void BM_el_residual(benchmark::State& state) {
  const RadialGrid& g = grid_of(state.range(0));
  const VecPair pair = pair_of(g);
  const ModelParams params{2.5, 1.0, 1.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(el_residual(pair, params));
}
BENCHMARK(BM_el_residual)->Arg(1024)->Arg(4096);

void BM_nehari_times(benchmark::State& state) {
  const FiberCoeffs c{1.0, 1.0, 3.0, 2.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(nehari_times(c));
}
BENCHMARK(BM_nehari_times);

}  // namespace

BENCHMARK_MAIN();
