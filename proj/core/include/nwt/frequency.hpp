#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nwt/graph.hpp"

namespace nwt {

// Distinct weights of a graph with their frequencies and member vertices.
// Entries are ordered ascending by weight value; member lists are ascending
// vertex ids, disjoint, and cover V.
//
// rank_order is the strict total order (frequency, weight) lexicographic
// ascending. It stands in wherever the algorithms need "frequency at most
// f(pivot)" with deterministic tie-breaking, and it is what makes the
// counting decomposition's multiplicity arguments exact.
template <class W>
struct FrequencyTable {
  struct Entry {
    W weight{};
    std::vector<int> members;
  };

  std::vector<Entry> entries;          // ascending by weight
  std::vector<std::size_t> rank_order; // entry indices, ascending (f, w)
  std::vector<std::size_t> rank_of;    // entry index -> position in rank_order

  std::size_t size() const { return entries.size(); }
  std::size_t frequency(std::size_t e) const { return entries[e].members.size(); }

  std::optional<std::size_t> find(const W& w) const {
    const auto it = std::lower_bound(
        entries.begin(), entries.end(), w,
        [](const Entry& e, const W& value) { return e.weight < value; });
    if (it == entries.end() || !(it->weight == w)) return std::nullopt;
    return static_cast<std::size_t>(it - entries.begin());
  }
};

template <class W>
FrequencyTable<W> build_frequency_table(const WeightedGraph<W>& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.weight(a) < g.weight(b);
  });

  FrequencyTable<W> table;
  for (int v : order) {
    if (table.entries.empty() || !(table.entries.back().weight == g.weight(v)))
      table.entries.push_back({g.weight(v), {}});
    table.entries.back().members.push_back(v);
  }

  table.rank_order.resize(table.entries.size());
  for (std::size_t e = 0; e < table.entries.size(); ++e) table.rank_order[e] = e;
  std::sort(table.rank_order.begin(), table.rank_order.end(),
            [&](std::size_t a, std::size_t b) {
              const std::size_t fa = table.frequency(a);
              const std::size_t fb = table.frequency(b);
              if (fa != fb) return fa < fb;
              return table.entries[a].weight < table.entries[b].weight;
            });
  table.rank_of.resize(table.entries.size());
  for (std::size_t pos = 0; pos < table.rank_order.size(); ++pos)
    table.rank_of[table.rank_order[pos]] = pos;
  return table;
}

// Greedy partition of W' = {w' : rank(w') <= rank(pivot)} scanned in rank
// order: right before a part's frequency sum would exceed 2 f(pivot), the
// part is closed and a new one starts. Every part's sum is <= the cap, every
// part but possibly the last exceeds f(pivot), and the part count is at most
// n / f(pivot) + 1.
template <class W>
struct WeightPartition {
  W pivot_weight{};
  std::size_t cap = 0;                          // 2 * f(pivot)
  std::vector<std::vector<std::size_t>> parts;  // entry indices, scan order

  std::size_t part_frequency_sum(const FrequencyTable<W>& table,
                                 std::size_t p) const {
    std::size_t sum = 0;
    for (const std::size_t e : parts[p]) sum += table.frequency(e);
    return sum;
  }
};

template <class W>
WeightPartition<W> greedy_partition(const FrequencyTable<W>& table,
                                    const W& pivot) {
  const auto pivot_entry = table.find(pivot);
  if (!pivot_entry)
    throw std::invalid_argument("greedy_partition: pivot weight not in W");

  WeightPartition<W> partition;
  partition.pivot_weight = pivot;
  partition.cap = 2 * table.frequency(*pivot_entry);

  const std::size_t pivot_rank = table.rank_of[*pivot_entry];
  std::vector<std::size_t> current;
  std::size_t current_sum = 0;
  for (std::size_t pos = 0; pos <= pivot_rank; ++pos) {
    const std::size_t e = table.rank_order[pos];
    const std::size_t f = table.frequency(e);
    if (current_sum + f > partition.cap) {
      partition.parts.push_back(std::move(current));
      current = {};
      current_sum = 0;
    }
    current.push_back(e);
    current_sum += f;
  }
  if (!current.empty()) partition.parts.push_back(std::move(current));
  return partition;
}

}  // namespace nwt
