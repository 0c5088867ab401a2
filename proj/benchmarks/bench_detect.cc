#include <benchmark/benchmark.h>

#include "nwt/count.hpp"
#include "nwt/detect.hpp"
#include "nwt/minimize.hpp"
#include "nwt/oracle.hpp"
#include "nwt/sparse.hpp"

namespace {

nwt::WeightedGraph<std::int64_t> instance(int n, double p,
                                          nwt::WeightDistribution dist,
                                          std::uint64_t seed) {
  return nwt::generate_random<std::int64_t>(n, p, -8, 8, seed, dist);
}

void BM_Detect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = instance(n, 0.05, nwt::WeightDistribution::uniform, 7);
  std::uint64_t dim_sum = 0;
  for (auto _ : state) {
    nwt::CostLedger ledger;
    benchmark::DoNotOptimize(nwt::detect<std::int64_t>(g, 0, ledger));
    dim_sum = ledger.slice_dim_sum();
  }
  state.counters["slice_dim_sum"] = static_cast<double>(dim_sum);
  state.counters["budget_10n2"] = 10.0 * n * n;
}
BENCHMARK(BM_Detect)->Arg(100)->Arg(250)->Arg(500)->Arg(1000);

void BM_DetectZipf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = instance(n, 0.05, nwt::WeightDistribution::zipf, 7);
  for (auto _ : state) {
    nwt::CostLedger ledger;
    benchmark::DoNotOptimize(nwt::detect<std::int64_t>(g, 0, ledger));
  }
}
BENCHMARK(BM_DetectZipf)->Arg(100)->Arg(250)->Arg(500)->Arg(1000);

void BM_BruteDetect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = instance(n, 0.05, nwt::WeightDistribution::uniform, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(nwt::oracle::brute_detect(g, std::int64_t{0}));
}
BENCHMARK(BM_BruteDetect)->Arg(100)->Arg(250)->Arg(500);

void BM_Count(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = instance(n, 0.05, nwt::WeightDistribution::uniform, 7);
  for (auto _ : state) {
    nwt::CostLedger ledger;
    benchmark::DoNotOptimize(nwt::count<std::int64_t>(g, 0, ledger));
  }
}
BENCHMARK(BM_Count)->Arg(100)->Arg(250)->Arg(500);

void BM_MinTriangle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::int64_t w_max = state.range(1);
  const auto g = nwt::generate_random<std::int64_t>(
      n, 0.1, -w_max, w_max, 7, nwt::WeightDistribution::uniform);
  std::size_t calls = 0;
  for (auto _ : state) {
    nwt::CostLedger ledger;
    nwt::MinStats stats;
    benchmark::DoNotOptimize(nwt::min_triangle(g, ledger, &stats));
    calls = stats.detect_calls;
  }
  state.counters["detect_calls"] = static_cast<double>(calls);
}
BENCHMARK(BM_MinTriangle)
    ->Args({200, 1})
    ->Args({200, 8})
    ->Args({200, 64})
    ->Args({200, 1024});

void BM_DetectSparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = nwt::generate_random<std::int64_t>(
      n, 4.0 / n, -8, 8, 7, nwt::WeightDistribution::uniform);
  for (auto _ : state) {
    nwt::CostLedger ledger;
    benchmark::DoNotOptimize(
        nwt::detect_sparse<std::int64_t>(g, 0, std::nullopt, ledger));
  }
}
BENCHMARK(BM_DetectSparse)->Arg(1000)->Arg(4000)->Arg(16000);

}  // namespace

BENCHMARK_MAIN();
