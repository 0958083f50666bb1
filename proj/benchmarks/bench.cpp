#include "akhiezer/elliptic.hpp"
#include "akhiezer/functional.hpp"
#include "akhiezer/oracle.hpp"
#include "akhiezer/solver.hpp"
#include "akhiezer/theta.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace akhiezer;

void BM_complete_K(benchmark::State& state) {
  double k = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(complete_K(k));
    k = (k < 0.9) ? k + 1e-6 : 0.3;
  }
}
BENCHMARK(BM_complete_K);

void BM_jacobi_real(benchmark::State& state) {
  const Modulus m = Modulus::from_k2(8.0 / 9.0);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobi_sn_cn_dn(u, m));
    u += 1e-4;
  }
}
BENCHMARK(BM_jacobi_real);

void BM_theta_series(benchmark::State& state) {
  const Nome n = Nome::from_modulus(Modulus::from_k2(8.0 / 9.0));
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta_Theta(u, n));
    u += 1e-4;
  }
}
BENCHMARK(BM_theta_series);

void BM_build_frame(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_frame(TwoIntervalSet{-0.3, 0.4}));
}
BENCHMARK(BM_build_frame);

void BM_solve_extremal(benchmark::State& state) {
  const TwoIntervalSet set{-0.3, 0.4};
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_extremal(n, set));
}
BENCHMARK(BM_solve_extremal)->Arg(5)->Arg(11)->Arg(21);

void BM_oracle(benchmark::State& state) {
  const TwoIntervalSet set{-0.3, 0.4};
  OracleConfig cfg;
  cfg.grid_size = 1001;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_minimize(4, set, cfg));
}
BENCHMARK(BM_oracle);

} // namespace

BENCHMARK_MAIN();
