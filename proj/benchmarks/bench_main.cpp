#include <benchmark/benchmark.h>

#include "cantor/kernel.hpp"
#include "cantor/oracle.hpp"
#include "cantor/point_process.hpp"
#include "cantor/serialize.hpp"
#include "support/artifacts.hpp"

using namespace cantor;

static void BM_RhoDistance(benchmark::State& state) {
  oracle::Rng rng(1);
  const int d = static_cast<int>(state.range(0));
  const auto a = oracle::random_measure(rng, d);
  const auto b = oracle::random_measure(rng, d);
  const auto terms = basis_count_through(d);
  for (auto _ : state) benchmark::DoNotOptimize(rho_distance(a, b, terms));
}
BENCHMARK(BM_RhoDistance)->DenseRange(2, 10, 4);

static void BM_ProductInterleaved(benchmark::State& state) {
  oracle::Rng rng(2);
  const int d = static_cast<int>(state.range(0));
  const auto a = oracle::random_measure(rng, d);
  const auto b = oracle::random_measure(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(product_interleaved(a, b));
}
BENCHMARK(BM_ProductInterleaved)->DenseRange(2, 8, 3);

static void BM_DiagonalExtract(benchmark::State& state) {
  oracle::Rng rng(3);
  std::vector<DyadicMeasure> seq;
  for (int i = 0; i < state.range(0); ++i) seq.push_back(oracle::random_measure(rng, 4, Rational(1), 0.1, 1000));
  const MeasureSeq s(seq);
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_extract(s));
}
BENCHMARK(BM_DiagonalExtract)->Arg(16)->Arg(64)->Arg(256);

static void BM_Disintegrate(benchmark::State& state) {
  oracle::Rng rng(4);
  const auto mu = oracle::random_measure(rng, 2 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_tower(mu, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Disintegrate)->DenseRange(2, 5, 1);

static void BM_FixedPoints(benchmark::State& state) {
  oracle::Rng rng(5);
  const int level = static_cast<int>(state.range(0));
  const auto k = oracle::random_kernel(rng, level, level + 1);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_points(k));
}
BENCHMARK(BM_FixedPoints)->DenseRange(1, 5, 2);

static void BM_StructuralOracle(benchmark::State& state) {
  OracleOptions opts;
  opts.max_ground = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_structural_oracle(opts));
}
BENCHMARK(BM_StructuralOracle)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_RoundTrip(benchmark::State& state) {
  oracle::Rng rng(6);
  std::vector<std::string> texts;
  for (std::size_t kind = 0; kind < oracle::kArtifactKinds; ++kind) texts.push_back(serialize(oracle::random_artifact(rng, kind)));
  for (auto _ : state) {
    for (const auto& t : texts) benchmark::DoNotOptimize(serialize(parse_artifact(t)));
  }
}
BENCHMARK(BM_RoundTrip);
BENCHMARK_MAIN();
