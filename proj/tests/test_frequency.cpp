#include <doctest.h>

#include <numeric>

#include "nwt/frequency.hpp"
#include "test_support.hpp"

using namespace nwt;

namespace {

// Graph with no edges whose weight multiset is given by (weight, frequency)
// pairs; edges are irrelevant to the partition logic.
WeightedGraph<std::int64_t> graph_with_frequencies(
    const std::vector<std::pair<std::int64_t, int>>& profile) {
  int n = 0;
  for (const auto& [w, f] : profile) n += f;
  WeightedGraph<std::int64_t> g(n);
  int v = 0;
  for (const auto& [w, f] : profile)
    for (int i = 0; i < f; ++i) g.set_weight(v++, w);
  return g;
}

}  // namespace

TEST_CASE("frequency table: entries ascend by weight, members cover V") {
  SUBCASE("K3 (1, 2, -3)") {
    const auto g = testsupport::complete_graph<std::int64_t>({1, 2, -3});
    const auto t = build_frequency_table(g);
    REQUIRE(t.size() == 3);
    CHECK(t.entries[0].weight == -3);
    CHECK(t.entries[1].weight == 1);
    CHECK(t.entries[2].weight == 2);
    for (std::size_t e = 0; e < t.size(); ++e) CHECK(t.frequency(e) == 1);
  }
  SUBCASE("five vertices all weight 0") {
    const auto g = graph_with_frequencies({{0, 5}});
    const auto t = build_frequency_table(g);
    REQUIRE(t.size() == 1);
    CHECK(t.frequency(0) == 5);
    CHECK(t.entries[0].members == std::vector<int>{0, 1, 2, 3, 4});
  }
  SUBCASE("weights (1,1,2,2,2,7)") {
    const auto g = graph_with_frequencies({{1, 2}, {2, 3}, {7, 1}});
    const auto t = build_frequency_table(g);
    REQUIRE(t.size() == 3);
    CHECK(t.frequency(*t.find(1)) == 2);
    CHECK(t.frequency(*t.find(2)) == 3);
    CHECK(t.frequency(*t.find(7)) == 1);
    CHECK_FALSE(t.find(3).has_value());
    std::size_t total = 0;
    for (std::size_t e = 0; e < t.size(); ++e) total += t.frequency(e);
    CHECK(total == 6);
  }
}

TEST_CASE("greedy partition: hand-simulated examples") {
  SUBCASE("frequencies [1,1,2,2,3] with cap 6 split as [[1,1,2,2],[3]]") {
    const auto g = graph_with_frequencies(
        {{10, 1}, {20, 1}, {30, 2}, {40, 2}, {50, 3}});
    const auto t = build_frequency_table(g);
    const auto p = greedy_partition(t, std::int64_t{50});
    CHECK(p.cap == 6);
    REQUIRE(p.parts.size() == 2);
    CHECK(p.part_frequency_sum(t, 0) == 6);
    CHECK(p.parts[0].size() == 4);
    REQUIRE(p.parts[1].size() == 1);
    CHECK(t.entries[p.parts[1][0]].weight == 50);
  }
  SUBCASE("three frequency-1 weights with cap 2 split as [[a,b],[c]]") {
    const auto g = graph_with_frequencies({{10, 1}, {20, 1}, {30, 1}});
    const auto t = build_frequency_table(g);
    const auto p = greedy_partition(t, std::int64_t{30});
    CHECK(p.cap == 2);
    REQUIRE(p.parts.size() == 2);
    CHECK(p.parts[0].size() == 2);
    CHECK(p.parts[1].size() == 1);
  }
  SUBCASE("W' = {pivot} gives one part") {
    const auto g = graph_with_frequencies({{10, 1}, {20, 2}, {30, 2}});
    const auto t = build_frequency_table(g);
    const auto p = greedy_partition(t, std::int64_t{10});
    REQUIRE(p.parts.size() == 1);
    REQUIRE(p.parts[0].size() == 1);
    CHECK(t.entries[p.parts[0][0]].weight == 10);
  }
  SUBCASE("pivot must be a weight of the graph") {
    const auto g = graph_with_frequencies({{10, 1}});
    const auto t = build_frequency_table(g);
    CHECK_THROWS_AS(greedy_partition(t, std::int64_t{11}), std::invalid_argument);
  }
}

TEST_CASE("partition invariants hold for every pivot on random profiles") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = generate_random<std::int64_t>(
        60, 0.0, -6, 6, seed,
        seed % 2 ? WeightDistribution::zipf : WeightDistribution::uniform);
    const auto t = build_frequency_table(g);
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    for (std::size_t pivot = 0; pivot < t.size(); ++pivot) {
      const auto p = greedy_partition(t, t.entries[pivot].weight);
      const std::size_t f = t.frequency(pivot);
      CHECK(p.cap == 2 * f);

      // parts are disjoint and their union is the rank prefix through pivot
      std::vector<std::size_t> seen;
      for (const auto& part : p.parts)
        for (const std::size_t e : part) seen.push_back(e);
      std::vector<std::size_t> expected(
          t.rank_order.begin(),
          t.rank_order.begin() + static_cast<long>(t.rank_of[pivot]) + 1);
      CHECK(seen == expected);

      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const std::size_t sum = p.part_frequency_sum(t, i);
        CHECK(sum <= p.cap);
        if (i + 1 < p.parts.size()) CHECK(sum > f);
      }
      CHECK(p.parts.size() <= n / f + 1);
    }
  }
}
