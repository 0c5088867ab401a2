#include <benchmark/benchmark.h>

#include "nwt/bitlinalg.hpp"
#include "nwt/random.hpp"

namespace {

nwt::BitMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                             std::uint64_t seed) {
  nwt::detail::SplitMix64 rng(seed);
  nwt::BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.unit() < density) m.set(i, j);
  return m;
}

void BM_BoolProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, n, 0.05, 1);
  const auto b = random_matrix(n, n, 0.05, 2);
  for (auto _ : state) {
    nwt::CostLedger ledger;
    auto c = nwt::bool_product(a, b, ledger);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_BoolProduct)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_TriangleCountAssigned(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  nwt::TripartiteSlice slice;
  slice.x_ids.resize(n);
  slice.y_ids.resize(n);
  slice.z_ids.resize(n);
  slice.adj_xy = random_matrix(n, n, 0.05, 3);
  slice.adj_yz = random_matrix(n, n, 0.05, 4);
  slice.adj_xz = random_matrix(n, n, 0.05, 5);
  for (auto _ : state) {
    nwt::CostLedger ledger;
    benchmark::DoNotOptimize(nwt::triangle_count_assigned(slice, ledger));
  }
}
BENCHMARK(BM_TriangleCountAssigned)->RangeMultiplier(2)->Range(128, 1024);

}  // namespace

BENCHMARK_MAIN();
