#include <benchmark/benchmark.h>

#include "cpnb/berezin.hpp"
#include "cpnb/geometry.hpp"
#include "cpnb/specfun.hpp"
#include "cpnb/spectra.hpp"

namespace {

using namespace cpnb;

void BM_JacobiP(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::jacobi_p({k, 2.0, 1.0}, x));
    x += 1e-6;
    if (x > 1.0) x = -1.0;
  }
}
BENCHMARK(BM_JacobiP)->Arg(4)->Arg(16)->Arg(64);

void BM_GaussJacobiRule(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::gauss_jacobi_rule(size, 1.0, 0.0));
}
BENCHMARK(BM_GaussJacobiRule)->Arg(8)->Arg(32)->Arg(128);

void BM_BerezinKernel(benchmark::State& state) {
  const LevelParams p{2, 3, 2};
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(berezin::berezin_kernel(p, x));
    x += 1e-6;
    if (x > 1.0) x = -1.0;
  }
}
BENCHMARK(BM_BerezinKernel);

void BM_WOracle(benchmark::State& state) {
  const LevelParams p{2, 3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(berezin::w_oracle(p, 3));
}
BENCHMARK(BM_WOracle);

void BM_WFormula(benchmark::State& state) {
  const LevelParams p{2, 3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(berezin::w_formula(p, 3));
}
BENCHMARK(BM_WFormula);

void BM_BuildWTable(benchmark::State& state) {
  const LevelParams p{2, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(berezin::build_wtable(p));
}
BENCHMARK(BM_BuildWTable);

void BM_SampleFS(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometry::sample_fs(n, seed++, 4096));
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_SampleFS)->Arg(1)->Arg(3);

void BM_RadialIntegral(benchmark::State& state) {
  const LevelParams p{3, 4, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometry::radial_integral(
        p.n, [&](double x) { return berezin::berezin_kernel(p, x); }, 64));
  }
}
BENCHMARK(BM_RadialIntegral);

void BM_DeltaNuFD(benchmark::State& state) {
  const LevelParams p{2, 1, 1};
  const ProjectivePoint pole(2, Complex(0.0));
  const ProjectivePoint z{Complex(0.4, 0.1), Complex(-0.2, 0.3)};
  auto section = [&](const ProjectivePoint& w) {
    return Complex(spectra::reproducing_kernel(p, geometry::cos2_fs(w, pole)));
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(spectra::apply_delta_nu_fd(p, section, z, 1e-3));
}
BENCHMARK(BM_DeltaNuFD);

}  // namespace

BENCHMARK_MAIN();
