#include <doctest.h>

#include "nwt/count.hpp"
#include "nwt/detect.hpp"
#include "nwt/oracle.hpp"
#include "test_support.hpp"

using namespace nwt;
using testsupport::complete_graph;

TEST_CASE("uniform_slice_count: distinct filter") {
  CostLedger ledger;
  const auto k3 = complete_graph<std::int64_t>({1, 2, -3});
  const std::vector<int> x{0}, y{1}, z{2};
  CHECK(uniform_slice_count<std::int64_t>(k3, x, y, z, 0, true, ledger) == 1);

  // y carries the same weight as X, so the filter drops the only triple
  const auto g = complete_graph<std::int64_t>({1, 1, -2});
  const std::vector<int> x2{0}, y2{1}, z2{2};
  CHECK(uniform_slice_count<std::int64_t>(g, x2, y2, z2, 0, true, ledger) == 0);
  CHECK(uniform_slice_count<std::int64_t>(g, x2, y2, z2, 0, false, ledger) == 1);
}

TEST_CASE("uniform_slice_count matches a filtered triple loop") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate_random<std::int64_t>(40, 0.3, -4, 4, seed,
                                           WeightDistribution::uniform);
    std::vector<int> xs, ys, zs;
    for (int v = 0; v < 12; ++v) {
      g.set_weight(v, 1);
      xs.push_back(v);
    }
    for (int v = 12; v < 26; ++v) ys.push_back(v);
    for (int v = 26; v < 40; ++v) zs.push_back(v);
    const std::int64_t target = static_cast<std::int64_t>(seed % 7) - 3;
    for (const bool filter : {false, true}) {
      std::uint64_t brute = 0;
      for (const int x : xs)
        for (const int y : ys)
          for (const int z : zs) {
            if (!g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z))
              continue;
            if (g.weight(x) + g.weight(y) + g.weight(z) != target) continue;
            if (filter && (g.weight(y) == g.weight(z) || g.weight(y) == 1 ||
                           g.weight(z) == 1))
              continue;
            ++brute;
          }
      CostLedger ledger;
      CHECK(uniform_slice_count<std::int64_t>(g, xs, ys, zs, target, filter,
                                              ledger) == brute);
    }
  }
}

TEST_CASE("count_type1: each distinct-weight solution is counted three times") {
  CostLedger ledger;
  const auto k3 = complete_graph<std::int64_t>({1, 2, -3});
  const auto [raw, adjusted] = count_type1(k3, std::int64_t{0}, ledger);
  CHECK(raw == 3);
  CHECK(adjusted == 1);

  const auto zeros = complete_graph<std::int64_t>({0, 0, 0});
  const auto [raw0, adj0] = count_type1(zeros, std::int64_t{0}, ledger);
  CHECK(raw0 == 0);
  CHECK(adj0 == 0);
}

TEST_CASE("count_type2: each two-equal solution is counted exactly twice") {
  CostLedger ledger;
  const auto g = complete_graph<std::int64_t>({1, 1, -2});
  const auto [raw, adjusted] = count_type2(g, std::int64_t{0}, ledger);
  CHECK(raw == 2);
  CHECK(adjusted == 1);

  const auto k3 = complete_graph<std::int64_t>({1, 2, -3});
  const auto [raw2, adj2] = count_type2(k3, std::int64_t{0}, ledger);
  CHECK(raw2 == 0);
  CHECK(adj2 == 0);
}

TEST_CASE("count_type3: all-equal solutions") {
  CostLedger ledger;
  const auto zeros = complete_graph<std::int64_t>({0, 0, 0});
  CHECK(count_type3(zeros, std::int64_t{0}, ledger) == 1);

  const auto ones = complete_graph<std::int64_t>({1, 1, 1});
  CHECK(count_type3(ones, std::int64_t{3}, ledger) == 1);
  CHECK(count_type3(ones, std::int64_t{0}, ledger) == 0);
  // target not divisible by 3 can never be all-equal (integer weights)
  CHECK(count_type3(ones, std::int64_t{4}, ledger) == 0);
}

TEST_CASE("count: breakdown on fixed instances") {
  CostLedger ledger;
  const auto k4 = complete_graph<std::int64_t>({0, 0, 0, 0});
  const auto b = count(k4, std::int64_t{0}, ledger);
  CHECK(b.type1 == 0);
  CHECK(b.type2 == 0);
  CHECK(b.type3 == 4);
  CHECK(b.total == 4);

  // two disjoint K3s: (1,2,-3) and (1,1,-2)
  WeightedGraph<std::int64_t> g(6);
  const std::int64_t weights[6] = {1, 2, -3, 1, 1, -2};
  for (int v = 0; v < 6; ++v) g.set_weight(v, weights[v]);
  for (int v = 0; v < 3; ++v)
    for (int u = v + 1; u < 3; ++u) g.add_edge(v, u);
  for (int v = 3; v < 6; ++v)
    for (int u = v + 1; u < 6; ++u) g.add_edge(v, u);
  const auto b2 = count(g, std::int64_t{0}, ledger);
  CHECK(b2.type1 == 1);
  CHECK(b2.type2 == 1);
  CHECK(b2.type3 == 0);
  CHECK(b2.total == 2);
}

TEST_CASE("count matches the oracle with exact per-type decomposition") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 4 + static_cast<int>(seed % 50);
    const double p = 0.1 + 0.8 * static_cast<double>(seed % 8) / 7.0;
    const auto dist =
        seed % 4 == 0 ? WeightDistribution::zipf : WeightDistribution::uniform;
    const auto g = generate_random<std::int64_t>(n, p, -5, 5, seed, dist);
    const std::int64_t target = static_cast<std::int64_t>(seed % 13) - 6;
    CostLedger ledger;
    const auto fast = count(g, target, ledger);
    const auto slow = oracle::brute_count(g, target);
    CHECK(fast.total == slow.total);
    CHECK(fast.type1 == slow.type1);
    CHECK(fast.type2 == slow.type2);
    CHECK(fast.type3 == slow.type3);
    CHECK(fast.raw_type1 % 3 == 0);
    CHECK(fast.raw_type2 % 2 == 0);
  }
}

TEST_CASE("all-zero weights: count at target 0 is the plain triangle census") {
  for (std::uint64_t seed = 300; seed < 310; ++seed) {
    const auto g = generate_random<std::int64_t>(50, 0.25, 0, 0, seed,
                                                 WeightDistribution::constant);
    std::uint64_t census = 0;
    for (int x = 0; x < 50; ++x)
      for (int y = x + 1; y < 50; ++y)
        for (int z = y + 1; z < 50; ++z)
          if (g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z))
            ++census;
    CostLedger ledger;
    const auto b = count(g, std::int64_t{0}, ledger);
    CHECK(b.total == census);
    CHECK(b.type3 == census);
    CHECK(b.type1 == 0);
    CHECK(b.type2 == 0);
  }
}

TEST_CASE("counting and detection are consistent") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    const auto g = generate_random<std::int64_t>(30, 0.3, -4, 4, seed,
                                                 WeightDistribution::uniform);
    CostLedger ledger;
    const bool any = detect<std::int64_t>(g, 0, ledger).has_value();
    CHECK((count(g, std::int64_t{0}, ledger).total >= 1) == any);
  }
}

TEST_CASE("count rejects inputs that could overflow the accumulators") {
  const WeightedGraph<std::int64_t> g(2'000'001);
  CostLedger ledger;
  CHECK_THROWS_AS(count(g, std::int64_t{0}, ledger), std::invalid_argument);
}
