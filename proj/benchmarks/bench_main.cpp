#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "endgraph/counterexample_checks.hpp"
#include "endgraph/degree.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/families.hpp"
#include "endgraph/flow.hpp"
#include "endgraph/presentation.hpp"
#include "endgraph/proof_steps.hpp"

using namespace endgraph;

static void BM_TruncateCounterexample(benchmark::State& state) {
  const auto p = counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(truncate(p, static_cast<Level>(state.range(0))));
}
BENCHMARK(BM_TruncateCounterexample)->Arg(20)->Arg(40)->Arg(80);

// rows of width w, each vertex to three distinct random vertices one level up
static LevelledDigraph layered(std::size_t depth, std::size_t width, unsigned seed) {
  std::mt19937 rng(seed);
  DigraphBuilder b("layered", depth, 1);
  for (std::size_t l = 0; l <= depth; ++l)
    for (std::size_t i = 0; i < width; ++i) b.add_vertex({"v" + std::to_string(l) + "_" + std::to_string(i), {}}, l);
  std::vector<std::size_t> cols(width);
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t l = 0; l < depth; ++l)
    for (std::size_t i = 0; i < width; ++i) {
      std::shuffle(cols.begin(), cols.end(), rng);
      for (std::size_t k = 0; k < std::min<std::size_t>(3, width); ++k)
        b.add_edge(static_cast<Vertex>(l * width + i), static_cast<Vertex>((l + 1) * width + cols[k]));
    }
  return std::move(b).build();
}

static void BM_MaxDisjointLayered(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto g = layered(50, width, 1);
  const auto A = g.vertices_at(0);
  const auto B = g.vertices_at(50);
  for (auto _ : state) benchmark::DoNotOptimize(max_disjoint_dipaths(g, A, B, Disjointness::vertex));
}
BENCHMARK(BM_MaxDisjointLayered)->Arg(8)->Arg(32)->Arg(128);

static void BM_MinSeparatorLayered(benchmark::State& state) {
  const auto g = layered(50, static_cast<std::size_t>(state.range(0)), 2);
  const auto A = g.vertices_at(0);
  const auto B = g.vertices_at(50);
  for (auto _ : state) benchmark::DoNotOptimize(min_vertex_separator(g, A, B, {}));
}
BENCHMARK(BM_MinSeparatorLayered)->Arg(8)->Arg(32)->Arg(128);

static void BM_InDegreeCounterexample(benchmark::State& state) {
  const auto p = counterexample();
  const auto g = truncate(p, static_cast<Level>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(in_degree_estimate(g, p.end("omega"), 5));
}
BENCHMARK(BM_InDegreeCounterexample)->Arg(20)->Arg(36)->Arg(60);

static void BM_DegreeReportExample52(benchmark::State& state) {
  const auto p = example52();
  const auto g = truncate(p, static_cast<Level>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(combined_in_degree(p, g, "omega", 5));
}
BENCHMARK(BM_DegreeReportExample52)->Arg(12)->Arg(20)->Arg(40);

static void BM_VerifyCounterexample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_counterexample(static_cast<Level>(state.range(0))));
}
BENCHMARK(BM_VerifyCounterexample)->Arg(20)->Arg(36);

static void BM_HalfgridRayFamily(benchmark::State& state) {
  const auto p = halfgrid();
  const auto g = truncate(p, 40);
  const auto R = canonical_ray(g, p.end("omega"));
  for (auto _ : state) {
    RayFamilyState s;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(state.range(0)); ++n)
      s = extend_ray_family(g, s, fresh_rays(g, R, s, n), R);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_HalfgridRayFamily)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
