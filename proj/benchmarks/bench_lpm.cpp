#include <benchmark/benchmark.h>

#include "lpm/decompose.hpp"
#include "lpm/lattice_path.hpp"
#include "lpm/matroid.hpp"
#include "lpm/polytope.hpp"
#include "lpm/triangulate.hpp"
#include "lpm/volume_ehrhart.hpp"

namespace {

lpm::Region Rectangle(int n) {
  return lpm::MakeRegion(lpm::BottomPath(n, n), lpm::TopPath(n, n));
}

void BM_Bases(benchmark::State& state) {
  const auto region = Rectangle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpm::Bases(region));
}
BENCHMARK(BM_Bases)->DenseRange(3, 7);

void BM_Facets(benchmark::State& state) {
  const auto region = lpm::CatalanFacetRegion(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpm::Facets(region));
}
BENCHMARK(BM_Facets)->DenseRange(3, 8);

void BM_Edges(benchmark::State& state) {
  const auto region = lpm::DyckRegion(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpm::Edges(region));
}
BENCHMARK(BM_Edges)->DenseRange(3, 6);

void BM_LatticePoints(benchmark::State& state) {
  const auto region = Rectangle(4);
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lpm::CountLatticePoints(region, t));
}
BENCHMARK(BM_LatticePoints)->RangeMultiplier(2)->Range(1, 32);

void BM_Volume(benchmark::State& state) {
  const auto region = Rectangle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpm::Volume(region));
}
BENCHMARK(BM_Volume)->DenseRange(3, 6);

void BM_Ehrhart(benchmark::State& state) {
  const auto region = Rectangle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lpm::ComputeEhrhartPolynomial(region));
}
BENCHMARK(BM_Ehrhart)->DenseRange(2, 4);

void BM_Hypersimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lpm::HypersimplexTriangulation(n / 2, n));
}
BENCHMARK(BM_Hypersimplex)->DenseRange(4, 8);

}  // namespace

BENCHMARK_MAIN();
