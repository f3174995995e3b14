#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "heis/heis.hpp"

namespace {

using namespace heis;

std::vector<EquidistantTriple> make_triples(std::size_t n) {
  std::mt19937_64 rng(5);
  std::vector<EquidistantTriple> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_equidistant_triple(rng));
  return out;
}

void BM_Distance(benchmark::State& state) {
  const auto triples = make_triples(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& P = triples[i++ % triples.size()];
    benchmark::DoNotOptimize(distance(P[0], P[2]));
  }
}
BENCHMARK(BM_Distance);

void BM_CrossRatioTriple(benchmark::State& state) {
  const auto triples = make_triples(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& P = triples[i++ % triples.size()];
    benchmark::DoNotOptimize(cross_ratio_triple(P[0], BoundaryPoint::infinity(), P[1], P[2]));
  }
}
BENCHMARK(BM_CrossRatioTriple);

void BM_AbcFromTriple(benchmark::State& state) {
  const auto triples = make_triples(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(abc_from_triple(triples[i++ % triples.size()]));
  }
}
BENCHMARK(BM_AbcFromTriple);

void BM_TripleFromAbc(benchmark::State& state) {
  std::mt19937_64 rng(6);
  std::vector<SurfacePoint> points;
  for (int k = 0; k < 256; ++k) points.push_back(random_surface_point(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(triple_from_abc(points[i++ % points.size()]));
  }
}
BENCHMARK(BM_TripleFromAbc);

void BM_SampleSurface(benchmark::State& state) {
  const SampleOptions options{.resolution = static_cast<int>(state.range(0)),
                              .threads = static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_surface(options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_SampleSurface)->Args({128, 1})->Args({512, 1})->Args({512, 0})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
