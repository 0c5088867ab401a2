#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nwt/bitlinalg.hpp"
#include "nwt/frequency.hpp"

namespace nwt {

// One-weight-fix: when every vertex of X carries the same weight w, keeping
// only Y-Z pairs with w + wt(y) + wt(z) = target reduces weighted detection
// over X x Y x Z to one unweighted triangle query.
template <class W>
SliceDecision uniform_slice_detect(const WeightedGraph<W>& g,
                                   std::span<const int> x_ids,
                                   std::span<const int> y_ids,
                                   std::span<const int> z_ids, const W& target,
                                   CostLedger& ledger) {
  if (x_ids.empty()) {
    const TripartiteSlice slice = make_slice(g, x_ids, y_ids, z_ids);
    return triangle_exists(slice, ledger);
  }
  const W w = g.weight(x_ids.front());
  for (const int x : x_ids)
    if (!(g.weight(x) == w))
      throw std::invalid_argument("uniform_slice_detect: X is not weight-uniform");
  const TripartiteSlice slice =
      make_slice(g, x_ids, y_ids, z_ids,
                 [&](int y, int z) { return w + g.weight(y) + g.weight(z) == target; });
  return triangle_exists(slice, ledger);
}

namespace detail {

// Per-pivot bookkeeping shared by detection and counting: the greedy
// partition, a weight-entry -> part lookup, and the Z buckets produced by
// one pass over the vertices (z joins the part holding target - w - wt(z);
// vertices whose complement weight is absent or outside W' are dropped).
template <class W>
struct PivotPlan {
  WeightPartition<W> partition;
  std::vector<int> part_of;              // entry index -> part id, -1 outside W'
  std::vector<std::vector<int>> buckets; // part id -> z ids, ascending
};

template <class W>
PivotPlan<W> plan_pivot(const WeightedGraph<W>& g, const FrequencyTable<W>& table,
                        std::size_t pivot_entry, const W& target) {
  PivotPlan<W> plan;
  const W& w = table.entries[pivot_entry].weight;
  plan.partition = greedy_partition(table, w);
  plan.part_of.assign(table.size(), -1);
  for (std::size_t p = 0; p < plan.partition.parts.size(); ++p)
    for (const std::size_t e : plan.partition.parts[p])
      plan.part_of[e] = static_cast<int>(p);

  plan.buckets.resize(plan.partition.parts.size());
  const int n = g.vertex_count();
  std::size_t bucketed = 0;
  for (int z = 0; z < n; ++z) {
    const auto complement = table.find(target - (w + g.weight(z)));
    if (!complement) continue;
    const int part = plan.part_of[*complement];
    if (part < 0) continue;
    plan.buckets[part].push_back(z);
    ++bucketed;
  }
  // The buckets are disjoint, so their total size never exceeds n.
  if (bucketed > static_cast<std::size_t>(n))
    throw std::logic_error("detect: per-pivot bucket sizes exceed n");
  return plan;
}

// Members of a part's weights, merged into one ascending id list.
template <class W>
std::vector<int> part_members(const FrequencyTable<W>& table,
                              std::span<const std::size_t> part,
                              std::optional<std::size_t> skip_entry = {}) {
  std::vector<int> ids;
  for (const std::size_t e : part) {
    if (skip_entry && *skip_entry == e) continue;
    ids.insert(ids.end(), table.entries[e].members.begin(),
               table.entries[e].members.end());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace detail

// Frequency-partition detection: returns a witness iff the graph has a
// triangle with wt(x) + wt(y) + wt(z) = target. Pivots are visited in
// ascending weight order; per pivot, the parts of the greedy partition are
// tried in order and the first hit wins, so the returned witness is
// deterministic. All matrix work happens inside the uniform-slice calls.
template <class W>
std::optional<TriangleWitness<W>> detect(const WeightedGraph<W>& g,
                                         const W& target, CostLedger& ledger) {
  const FrequencyTable<W> table = build_frequency_table(g);
  for (std::size_t pivot = 0; pivot < table.size(); ++pivot) {
    const auto plan = detail::plan_pivot(g, table, pivot, target);
    for (std::size_t p = 0; p < plan.partition.parts.size(); ++p) {
      const std::vector<int> ys =
          detail::part_members(table, plan.partition.parts[p]);
      const SliceDecision dec = uniform_slice_detect(
          g, table.entries[pivot].members, ys, plan.buckets[p], target, ledger);
      if (dec.found) {
        const W sum = g.weight(dec.x) + g.weight(dec.y) + g.weight(dec.z);
        if (!(sum == target))
          throw std::logic_error("detect: witness sum does not match target");
        return TriangleWitness<W>{dec.x, dec.y, dec.z, sum};
      }
    }
  }
  return std::nullopt;
}

}  // namespace nwt
