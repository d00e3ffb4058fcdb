// Microbenchmarks for the stages that dominate a full run: the pairwise
// matrix, the extraction rounds, silhouette scoring, the grid scan, and the
// baselines. Sizes bracket the desk-scale range the library targets.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "ipdclust/ipdclust.hpp"

using namespace ipdclust;

namespace {

DataMatrix random_data(std::uint64_t seed, std::size_t n, std::size_t p, double spread = 5.0) {
  SeededRng rng(seed);
  DataMatrix data = make_data(n, p);
  for (double& v : data.values) v = rng.uniform() * spread;
  return data;
}

void bm_pairwise_euclidean(benchmark::State& state) {
  DataMatrix data = random_data(1, static_cast<std::size_t>(state.range(0)),
                                static_cast<std::size_t>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(pairwise_matrix(data, DistanceMeasure::euclidean));
}
BENCHMARK(bm_pairwise_euclidean)
    ->Args({300, 6})
    ->Args({750, 64})
    ->Args({300, 2000})
    ->Unit(benchmark::kMillisecond);

void bm_pairwise_gower(benchmark::State& state) {
  DataMatrix data = random_data(2, static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_matrix(data, DistanceMeasure::gower));
}
BENCHMARK(bm_pairwise_gower)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

void bm_rounds(benchmark::State& state) {
  DataMatrix data = random_data(3, static_cast<std::size_t>(state.range(0)), 4, 1.0);
  DistanceMatrix norm = normalize_matrix(pairwise_matrix(data, DistanceMeasure::euclidean));
  for (auto _ : state) benchmark::DoNotOptimize(run_rounds(norm, 0.15, true));
}
BENCHMARK(bm_rounds)->Arg(100)->Arg(300)->Arg(750)->Unit(benchmark::kMillisecond);

void bm_asw(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  DataMatrix data = random_data(4, n, 4, 1.0);
  DistanceMatrix raw = pairwise_matrix(data, DistanceMeasure::euclidean);
  HyperParams params;
  params.h = 0.2;
  params.n_prime = 3;
  ClusterAssignment assignment = cluster_distances(raw, params).assignment;
  if (num_clusters(assignment) < 2) {
    state.SkipWithError("degenerate benchmark input");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(asw(assignment, raw));
}
BENCHMARK(bm_asw)->Arg(300)->Arg(750)->Unit(benchmark::kMillisecond);

void bm_scan_grid(benchmark::State& state) {
  DataMatrix data = random_data(5, static_cast<std::size_t>(state.range(0)), 4, 1.0);
  DistanceMatrix raw = pairwise_matrix(data, DistanceMeasure::euclidean);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan(raw, {0.10, 0.15, 0.20, 0.25, 0.30}, {3, 4, 5}, {}));
}
BENCHMARK(bm_scan_grid)->Arg(150)->Arg(400)->Unit(benchmark::kMillisecond);

void bm_kmeans(benchmark::State& state) {
  DataMatrix data = random_data(6, static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(kmeans(data, 4, 1, 20));
}
BENCHMARK(bm_kmeans)->Arg(300)->Arg(750)->Unit(benchmark::kMillisecond);

void bm_pam(benchmark::State& state) {
  DataMatrix data = random_data(7, static_cast<std::size_t>(state.range(0)), 6);
  DistanceMatrix raw = pairwise_matrix(data, DistanceMeasure::euclidean);
  for (auto _ : state) benchmark::DoNotOptimize(pam(raw, 4));
}
BENCHMARK(bm_pam)->Arg(150)->Arg(400)->Unit(benchmark::kMillisecond);

void bm_dbscan(benchmark::State& state) {
  DataMatrix data = random_data(8, static_cast<std::size_t>(state.range(0)), 4);
  DistanceMatrix raw = pairwise_matrix(data, DistanceMeasure::euclidean);
  for (auto _ : state) benchmark::DoNotOptimize(dbscan(raw, 0.8, 4));
}
BENCHMARK(bm_dbscan)->Arg(300)->Arg(750)->Unit(benchmark::kMillisecond);

void bm_gen_s3(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(gen_s3(seed++));
}
BENCHMARK(bm_gen_s3);

}  // namespace

BENCHMARK_MAIN();
