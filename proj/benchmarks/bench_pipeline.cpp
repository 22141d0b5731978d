#include <benchmark/benchmark.h>

#include "latticecurv/bond_graph.hpp"
#include "latticecurv/curvature.hpp"
#include "latticecurv/energy.hpp"
#include "latticecurv/ground_state.hpp"
#include "latticecurv/lattice.hpp"
#include "latticecurv/report.hpp"
#include "latticecurv/triangulation.hpp"

namespace lc = latticecurv;

namespace {

// Random lattice subset of roughly n particles.
lc::Configuration lattice_sample(int n) {
  int radius = 1;
  while (3 * radius * radius + 3 * radius + 1 < 2 * n) ++radius;
  return lc::to_configuration(lc::random_lattice_subset(radius, 0.5, 42));
}

void BM_BondGraph(benchmark::State& state) {
  const auto x = lattice_sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lc::build_bond_graph(x, lc::BondRange::unit()));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(x.size()));
}
BENCHMARK(BM_BondGraph)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Triangulate(benchmark::State& state) {
  const auto g = lc::build_bond_graph(lattice_sample(static_cast<int>(state.range(0))), lc::BondRange::unit());
  const auto strategy = state.range(1) == 0 ? lc::TriangulationStrategy::EarClip : lc::TriangulationStrategy::Fan;
  for (auto _ : state) benchmark::DoNotOptimize(lc::triangulate(g, strategy));
}
BENCHMARK(BM_Triangulate)->ArgsProduct({{256, 4096}, {0, 1}});

void BM_GaussBonnet(benchmark::State& state) {
  const auto t = lc::triangulate(lc::build_bond_graph(lattice_sample(static_cast<int>(state.range(0))), lc::BondRange::unit()));
  for (auto _ : state) benchmark::DoNotOptimize(lc::gauss_bonnet_report(t));
}
BENCHMARK(BM_GaussBonnet)->Arg(256)->Arg(4096);

void BM_HeitmannRadinDecomposition(benchmark::State& state) {
  const auto x = lc::build_minimizer(static_cast<int>(state.range(0)));
  const auto v = lc::Potential::heitmann_radin();
  for (auto _ : state) benchmark::DoNotOptimize(lc::energy_decomposition(x, v));
}
BENCHMARK(BM_HeitmannRadinDecomposition)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_LennardJonesDecomposition(benchmark::State& state) {
  const auto x = lc::generate_random_config(static_cast<int>(state.range(0)), 7, 0.8);
  const auto v = lc::Potential::lennard_jones(6);
  for (auto _ : state) benchmark::DoNotOptimize(lc::energy_decomposition(x, v));
}
BENCHMARK(BM_LennardJonesDecomposition)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto x = lc::generate_lattice_patch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lc::analyze(x));
}
BENCHMARK(BM_Analyze)->Arg(5)->Arg(20);

void BM_BuildMinimizer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lc::build_minimizer(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildMinimizer)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lc::brute_force_min_lattice(n, n - 1));
}
BENCHMARK(BM_Oracle)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
