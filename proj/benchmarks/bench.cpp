#include <benchmark/benchmark.h>

#include "iepl/graph.hpp"
#include "iepl/minvar.hpp"
#include "iepl/realizability.hpp"
#include "iepl/sampler.hpp"
#include "iepl/spectral.hpp"

namespace {

void bm_m2_assembly(benchmark::State& state) {
  const auto g = iepl::Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.m2_matrix());
  }
}
BENCHMARK(bm_m2_assembly)->Arg(6)->Arg(10)->Arg(14);

void bm_minvar_exact(benchmark::State& state) {
  const auto g = iepl::Graph::path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iepl::minvar_exact(g));
  }
}
BENCHMARK(bm_minvar_exact)->Arg(8)->Arg(12)->Arg(16);

void bm_minvar_descent(benchmark::State& state) {
  const auto g = iepl::Graph::path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(iepl::minvar_descent(g));
  }
}
BENCHMARK(bm_minvar_descent)->Arg(8)->Arg(32)->Arg(128);

void bm_sample_spectra(benchmark::State& state) {
  const auto g = iepl::Graph::cycle(6);
  const long count = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iepl::sample_spectra(g, count, 42));
  }
  state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(bm_sample_spectra)->Arg(100)->Arg(1000);

void bm_realize_star(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = iepl::Graph::star(n);
  Eigen::VectorXd w(n - 1);
  for (int i = 0; i < n - 1; ++i) w(i) = 1.0 + i;
  const auto spec = iepl::spectrum_of(iepl::assemble_laplacian(g, w));
  const auto t = iepl::TargetSpectrum::from_computed(spec.values);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iepl::realize_star(t));
  }
}
BENCHMARK(bm_realize_star)->Arg(4)->Arg(8)->Arg(16);

void bm_spectrum(benchmark::State& state) {
  const auto g = iepl::Graph::complete(static_cast<int>(state.range(0)));
  const Eigen::VectorXd w = Eigen::VectorXd::Ones(g.edge_count());
  const Eigen::MatrixXd lap = iepl::assemble_laplacian(g, w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(iepl::spectrum_of(lap));
  }
}
BENCHMARK(bm_spectrum)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
