#pragma once

#include <optional>
#include <utility>

#include "nwt/count_breakdown.hpp"
#include "nwt/graph.hpp"

namespace nwt {
// Brute-force references. These touch only the graph type, never the bit
// matrices or partitions, so agreement with the main pipeline is a meaningful
// check. Intended for n up to a few hundred.
namespace oracle {

template <class W>
std::optional<TriangleWitness<W>> brute_detect(const WeightedGraph<W>& g,
                                               const W& target) {
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!g.has_edge(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (!g.has_edge(y, z) || !g.has_edge(x, z)) continue;
        const W sum = g.weight(x) + g.weight(y) + g.weight(z);
        if (sum == target) return TriangleWitness<W>{x, y, z, sum};
      }
    }
  return std::nullopt;
}

template <class W>
CountBreakdown brute_count(const WeightedGraph<W>& g, const W& target) {
  CountBreakdown breakdown;
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!g.has_edge(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (!g.has_edge(y, z) || !g.has_edge(x, z)) continue;
        if (!(g.weight(x) + g.weight(y) + g.weight(z) == target)) continue;
        const W& a = g.weight(x);
        const W& b = g.weight(y);
        const W& c = g.weight(z);
        if (a == b && b == c)
          ++breakdown.type3;
        else if (a == b || b == c || a == c)
          ++breakdown.type2;
        else
          ++breakdown.type1;
      }
    }
  breakdown.raw_type1 = 3 * breakdown.type1;
  breakdown.raw_type2 = 2 * breakdown.type2;
  breakdown.total = breakdown.type1 + breakdown.type2 + breakdown.type3;
  return breakdown;
}

template <class W>
std::optional<std::pair<TriangleWitness<W>, W>> brute_min(
    const WeightedGraph<W>& g) {
  std::optional<std::pair<TriangleWitness<W>, W>> best;
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!g.has_edge(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (!g.has_edge(y, z) || !g.has_edge(x, z)) continue;
        const W sum = g.weight(x) + g.weight(y) + g.weight(z);
        if (!best || sum < best->second)
          best = {TriangleWitness<W>{x, y, z, sum}, sum};
      }
    }
  return best;
}

}  // namespace oracle
}  // namespace nwt
