#include <benchmark/benchmark.h>

#include "conecomm/extremal_solver.hpp"
#include "conecomm/mode_formulas.hpp"
#include "conecomm/sup_analysis.hpp"
#include "conecomm/variational_oracle.hpp"

using namespace conecomm;

static void ModeConstantHyperbolic(benchmark::State& state) {
  const ModePoint mp{{0.85 * pi, 0.2}, 1.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_modes_real(mp));
  }
}
BENCHMARK(ModeConstantHyperbolic);

static void ModeConstantQuotient(benchmark::State& state) {
  const ModePoint mp{{0.85 * pi, 0.2}, 1.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_modes_complex(mp));
  }
}
BENCHMARK(ModeConstantQuotient);

static void CoefficientRoute(benchmark::State& state) {
  const ModePoint mp{{0.85 * pi, 0.2}, 1.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_coefficients(mp, Parity::plus).beta);
  }
}
BENCHMARK(CoefficientRoute);

static void SupOverFrequency(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_sup({0.85 * pi, 0.2}));
  }
}
BENCHMARK(SupOverFrequency);

static void OracleSolve(benchmark::State& state) {
  const ModePoint mp{{0.85 * pi, 0.2}, 1.7};
  const AngularBasis basis = build_basis(mp.sigma(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_rayleigh_max(assemble_forms(mp, basis)).lambda_max);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(OracleSolve)->Arg(16)->Arg(32)->Arg(48)->Complexity();

BENCHMARK_MAIN();
