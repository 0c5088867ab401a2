#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>

#include "nwt/count_breakdown.hpp"
#include "nwt/detect.hpp"

namespace nwt {

// Counting flavor of the one-weight-fix: assigned triples over X x Y x Z with
// weight sum = target. With distinct_filter set, (y, z) pairs survive only
// when wt(y), wt(z) and the uniform X weight are pairwise distinct.
template <class W>
std::uint64_t uniform_slice_count(const WeightedGraph<W>& g,
                                  std::span<const int> x_ids,
                                  std::span<const int> y_ids,
                                  std::span<const int> z_ids, const W& target,
                                  bool distinct_filter, CostLedger& ledger) {
  if (x_ids.empty()) {
    const TripartiteSlice slice = make_slice(g, x_ids, y_ids, z_ids);
    return triangle_count_assigned(slice, ledger);
  }
  const W w = g.weight(x_ids.front());
  for (const int x : x_ids)
    if (!(g.weight(x) == w))
      throw std::invalid_argument("uniform_slice_count: X is not weight-uniform");
  const TripartiteSlice slice =
      make_slice(g, x_ids, y_ids, z_ids, [&](int y, int z) {
        const W wy = g.weight(y);
        const W wz = g.weight(z);
        if (!(w + wy + wz == target)) return false;
        if (distinct_filter && (wy == wz || wy == w || wz == w)) return false;
        return true;
      });
  return triangle_count_assigned(slice, ledger);
}

// Distinct-weight solutions. The frequency-partition loop is run over every
// pivot with the distinct filter on; the strict rank order plays the role of
// tie-free frequencies, making each type-1 solution contribute exactly three
// assigned triples (two at its highest-ranked weight, one at the middle).
template <class W>
std::pair<std::uint64_t, std::uint64_t> count_type1(const WeightedGraph<W>& g,
                                                    const W& target,
                                                    CostLedger& ledger) {
  const FrequencyTable<W> table = build_frequency_table(g);
  std::uint64_t raw = 0;
  for (std::size_t pivot = 0; pivot < table.size(); ++pivot) {
    const W& w = table.entries[pivot].weight;
    auto plan = detail::plan_pivot(g, table, pivot, target);
    for (std::size_t p = 0; p < plan.partition.parts.size(); ++p) {
      // Same-weight vertices can never appear in a distinct-weight triple,
      // so drop them from the roles before the pair filter even runs.
      const std::vector<int> ys =
          detail::part_members(table, plan.partition.parts[p], pivot);
      std::vector<int>& zs = plan.buckets[p];
      std::erase_if(zs, [&](int z) { return g.weight(z) == w; });
      raw += uniform_slice_count(g, table.entries[pivot].members, ys, zs,
                                 target, /*distinct_filter=*/true, ledger);
    }
  }
  if (raw % 3 != 0)
    throw std::logic_error("count_type1: raw count not divisible by 3");
  return {raw, raw / 3};
}

// Exactly-two-equal solutions: for each weight w of the repeated pair, the
// third weight is forced to target - 2w. Ordered (x, x') pairs make each
// triangle count exactly twice.
template <class W>
std::pair<std::uint64_t, std::uint64_t> count_type2(const WeightedGraph<W>& g,
                                                    const W& target,
                                                    CostLedger& ledger) {
  const FrequencyTable<W> table = build_frequency_table(g);
  std::uint64_t raw = 0;
  for (const auto& entry : table.entries) {
    const W& w = entry.weight;
    const W third = target - (w + w);
    if (third == w) continue;
    const auto e = table.find(third);
    if (!e) continue;
    const TripartiteSlice slice = make_slice(
        g, entry.members, entry.members, table.entries[*e].members);
    raw += triangle_count_assigned(slice, ledger);
  }
  if (raw % 2 != 0)
    throw std::logic_error("count_type2: raw count not divisible by 2");
  return {raw, raw / 2};
}

// All-equal solutions: only the weight with w + w + w = target can carry
// them, and those are plain triangles inside its member set.
template <class W>
std::uint64_t count_type3(const WeightedGraph<W>& g, const W& target,
                          CostLedger& ledger) {
  const FrequencyTable<W> table = build_frequency_table(g);
  for (const auto& entry : table.entries) {
    const W& w = entry.weight;
    if (w + w + w == target)
      return triangle_count_within(g, entry.members, ledger);
  }
  return 0;
}

// Number of unordered triangles whose node weights sum to target.
template <class W>
CountBreakdown count(const WeightedGraph<W>& g, const W& target,
                     CostLedger& ledger) {
  if (g.vertex_count() > 2'000'000)
    throw std::invalid_argument(
        "count: graphs beyond 2e6 vertices could overflow the 64-bit "
        "accumulators");
  CountBreakdown breakdown;
  const auto [raw1, adj1] = count_type1(g, target, ledger);
  const auto [raw2, adj2] = count_type2(g, target, ledger);
  breakdown.raw_type1 = raw1;
  breakdown.type1 = adj1;
  breakdown.raw_type2 = raw2;
  breakdown.type2 = adj2;
  breakdown.type3 = count_type3(g, target, ledger);
  breakdown.total = breakdown.type1 + breakdown.type2 + breakdown.type3;
  return breakdown;
}

}  // namespace nwt
