#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nwt/detect.hpp"

namespace nwt {

struct SparseStats {
  std::size_t delta = 0;
  std::size_t low_count = 0;
  std::size_t high_count = 0;
  std::uint64_t pairs_examined = 0;
  bool dense_stage_ran = false;
};

// low = {v : deg(v) < delta}, high = the rest. Since degrees sum to 2m,
// |high| <= 2m / delta.
template <class W>
std::pair<std::vector<int>, std::vector<int>> split_by_degree(
    const WeightedGraph<W>& g, std::size_t delta) {
  if (delta < 1) throw std::invalid_argument("split_by_degree: delta must be >= 1");
  std::vector<int> low, high;
  for (int v = 0; v < g.vertex_count(); ++v)
    (static_cast<std::size_t>(g.degree(v)) < delta ? low : high).push_back(v);
  if (high.size() * delta > 2 * g.edge_count())
    throw std::logic_error("split_by_degree: high-degree bound violated");
  return {std::move(low), std::move(high)};
}

// Direct scan of every triangle that touches a low-degree vertex: for each
// v in `low` (ascending), each neighbor pair u < w is tested for the closing
// edge and the exact target sum. First hit wins.
template <class W>
std::optional<TriangleWitness<W>> enumerate_low_degree(
    const WeightedGraph<W>& g, std::span<const int> low, const W& target,
    CostLedger& ledger, std::uint64_t* pairs_examined = nullptr) {
  (void)ledger;  // no matrix work happens here
  std::uint64_t pairs = 0;
  std::optional<TriangleWitness<W>> result;
  for (const int v : low) {
    if (result) break;
    const auto& adj = g.neighbors(v);
    for (std::size_t i = 0; i < adj.size() && !result; ++i) {
      for (std::size_t j = i + 1; j < adj.size(); ++j) {
        ++pairs;
        const int u = adj[i];
        const int w = adj[j];
        if (!g.has_edge(u, w)) continue;
        const W sum = g.weight(v) + g.weight(u) + g.weight(w);
        if (sum == target) {
          int ids[3] = {v, u, w};
          std::sort(std::begin(ids), std::end(ids));
          result = TriangleWitness<W>{ids[0], ids[1], ids[2], sum};
          break;
        }
      }
    }
  }
  if (pairs_examined) *pairs_examined = pairs;
  return result;
}

// Degree-split detection: triangles with a low-degree corner come out of the
// enumeration; the rest live entirely inside the high-degree set and go to
// the dense frequency-partition detector on the induced subgraph. Default
// delta is max(1, ceil(m^0.4)).
template <class W>
std::optional<TriangleWitness<W>> detect_sparse(
    const WeightedGraph<W>& g, const W& target,
    std::optional<std::size_t> delta_override, CostLedger& ledger,
    SparseStats* stats = nullptr) {
  SparseStats local;
  SparseStats& s = stats ? *stats : local;
  s = SparseStats{};

  const std::uint64_t m = g.edge_count();
  s.delta = delta_override.value_or(std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(std::pow(double(m), 0.4)))));

  const auto [low, high] = split_by_degree(g, s.delta);
  s.low_count = low.size();
  s.high_count = high.size();

  const auto direct = enumerate_low_degree(g, low, target, ledger,
                                           &s.pairs_examined);
  if (s.pairs_examined > m * s.delta)
    throw std::logic_error("detect_sparse: enumerated pair budget violated");
  if (direct) return direct;

  s.dense_stage_ran = true;
  const InducedSubgraph<W> induced = induced_subgraph(g, high);
  const auto witness = detect(induced.graph, target, ledger);
  if (!witness) return std::nullopt;
  int ids[3] = {induced.new_to_old[witness->x], induced.new_to_old[witness->y],
                induced.new_to_old[witness->z]};
  std::sort(std::begin(ids), std::end(ids));
  return TriangleWitness<W>{ids[0], ids[1], ids[2], witness->weight_sum};
}

}  // namespace nwt
