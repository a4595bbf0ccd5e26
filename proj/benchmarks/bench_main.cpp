#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "gaplab/netgen.hpp"
#include "gaplab/pagerank.hpp"
#include "gaplab/params.hpp"
#include "gaplab/spectral.hpp"

using namespace gaplab;

namespace {

SimpleDigraph copy_graph(std::size_t n) {
  Rng rng(derive_seed(1, n, 0));
  return generate_graph(CopyParams{}, n, rng);
}

std::vector<double> random_vector(std::size_t n) {
  Rng rng(n);
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform();
  return v;
}

void BM_ApplyGoogleStructured(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto google = google_matrix(copy_graph(n));
  const auto v = random_vector(n);
  std::vector<double> out(n);
  for (auto _ : state) {
    google.apply(v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyGoogleStructured)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_ApplyGoogleDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Eigen::MatrixXd dense = dense_google(google_matrix(copy_graph(n)));
  const auto v = random_vector(n);
  const Eigen::Map<const Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd y(n);
  for (auto _ : state) {
    y.noalias() = dense * x;
    benchmark::DoNotOptimize(y.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyGoogleDense)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_TwoLowest(benchmark::State& state, SolverMode mode) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto target = std::make_shared<const GoogleMatrix>(google_matrix(copy_graph(n)));
  auto reference = std::make_shared<const GoogleMatrix>(complete_reference(n));
  const HamiltonianOperator op(target, reference, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(two_lowest(op, mode).gap());
}
BENCHMARK_CAPTURE(BM_TwoLowest, dense, SolverMode::dense)
    ->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TwoLowest, iterative, SolverMode::iterative)
    ->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond);

void BM_MinGap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto google = google_matrix(copy_graph(n));
  for (auto _ : state) benchmark::DoNotOptimize(min_gap(google).delta);
}
BENCHMARK(BM_MinGap)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state, ModelParams params) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    benchmark::DoNotOptimize(generate_graph(params, n, rng).edge_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Generate, pa, ModelParams{PaParams{}})->Arg(4096)->Arg(65536);
BENCHMARK_CAPTURE(BM_Generate, copy, ModelParams{CopyParams{}})->Arg(4096)->Arg(65536);
BENCHMARK_CAPTURE(BM_Generate, alpha_pa, ModelParams{AlphaPaParams{0.415, 0.0851, 0.0128}})
    ->Arg(4096)->Arg(65536);

void BM_PageRankPower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto google = google_matrix(copy_graph(n));
  for (auto _ : state) benchmark::DoNotOptimize(pagerank_power(google).iterations);
}
BENCHMARK(BM_PageRankPower)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
