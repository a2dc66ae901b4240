#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "frontmesh/cdt.hpp"
#include "frontmesh/geometry.hpp"
#include "frontmesh/lfs.hpp"
#include "frontmesh/pipeline.hpp"
#include "frontmesh/splitter.hpp"

using namespace frontmesh;

namespace {

std::vector<Point2> random_points(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

Pslg load(const char* name) { return read_poly_file(std::string(FRONTMESH_DATA_DIR) + "/" + name); }

}  // namespace

static void BM_Orient2d(benchmark::State& state) {
  const auto pts = random_points(3 * 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orient2d(pts[i], pts[i + 1], pts[i + 2]));
    i = (i + 3) % pts.size();
  }
}
BENCHMARK(BM_Orient2d);

// Collinear triples force the exact path.
static void BM_Orient2dDegenerate(benchmark::State& state) {
  std::vector<Point2> pts;
  for (int k = 0; k < 1024; ++k) {
    const double t = 0.001 * k;
    pts.push_back({0.1 + t, 0.3 + t});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orient2d({0.1, 0.3}, {0.7, 0.9}, pts[i]));
    i = (i + 1) % pts.size();
  }
}
BENCHMARK(BM_Orient2dDegenerate);

static void BM_Incircle(benchmark::State& state) {
  const auto pts = random_points(4 * 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(incircle(pts[i], pts[i + 1], pts[i + 2], pts[i + 3]));
    i = (i + 4) % pts.size();
  }
}
BENCHMARK(BM_Incircle);

static void BM_FeatureSizes(benchmark::State& state) {
  const Pslg g = load("square_hole.poly");
  for (auto _ : state) benchmark::DoNotOptimize(feature_sizes(g));
}
BENCHMARK(BM_FeatureSizes);

static void BM_SolveMapping(benchmark::State& state) {
  const auto sizes = feature_sizes(load("lshape.poly"));
  for (auto _ : state)
    for (const auto& f : sizes) benchmark::DoNotOptimize(solve_mapping(f));
}
BENCHMARK(BM_SolveMapping);

static void BM_Triangulate(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Mesh::triangulate(pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Triangulate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Pipeline(benchmark::State& state) {
  const Pslg g = load("square_hole.poly");
  PipelineOptions opt;
  opt.theta_deg = 25;
  opt.mode = state.range(0) ? DelaunayMode::constrained : DelaunayMode::truly;
  opt.record_events = false;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(g, opt));
}
BENCHMARK(BM_Pipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
