#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

#include "nwt/detect.hpp"

namespace nwt {

// Bit-scaling state for minimization: weights are shifted by w_max to become
// nonnegative, and level k works with the shifted weights floor-divided by
// 2^k. Successive level minima obey 2 m_{k+1} <= m_k <= 2 m_{k+1} + 3.
struct ScalingState {
  std::int64_t w_max = 0;
  int level = 0;
  std::int64_t level_min = 0;
  TriangleWitness<std::int64_t> witness;
};

struct MinStats {
  std::size_t detect_calls = 0;  // exact-target detections + the initial
                                 // unweighted triangle check
  int levels = 0;
  std::int64_t w_max = 0;
};

inline std::int64_t max_abs_weight(const WeightedGraph<std::int64_t>& g) {
  std::int64_t w_max = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    w_max = std::max(w_max, std::abs(g.weight(v)));
  return w_max;
}

// Same structure, weights replaced by floor((wt(v) + w_max) / 2^k). The
// scaled weights live in [0, 2 w_max / 2^k].
inline WeightedGraph<std::int64_t> scaled_graph(
    const WeightedGraph<std::int64_t>& g, int k,
    std::optional<std::int64_t> w_max_override = std::nullopt) {
  if (k < 0) throw std::invalid_argument("scaled_graph: negative level");
  // An override below the true maximum would make shifted weights negative.
  const std::int64_t w_max = std::max(max_abs_weight(g),
                                      w_max_override.value_or(0));
  WeightedGraph<std::int64_t> scaled = g;
  for (int v = 0; v < g.vertex_count(); ++v)
    scaled.set_weight(v, (g.weight(v) + w_max) >> k);
  return scaled;
}

// Smallest K with 2^K >= 2 w_max + 1; level-K scaled weights are all zero.
inline int scaling_levels(std::int64_t w_max) {
  int k = 0;
  while ((std::int64_t{1} << k) < 2 * w_max + 1) ++k;
  return k;
}

// Minimum node-weight triangle via most-significant-bit-first scaling: after
// one unweighted check for triangle-freeness, each level refines the previous
// minimum through at most four exact-target detections (targets
// 2 m_{k+1} + d for d = 0..3, ascending, first hit wins). Total detections
// are O(log w_max) and the result is the exact minimum with a witness.
inline std::optional<std::pair<TriangleWitness<std::int64_t>, std::int64_t>>
min_triangle(const WeightedGraph<std::int64_t>& g, CostLedger& ledger,
             MinStats* stats = nullptr,
             std::optional<std::int64_t> w_max_override = std::nullopt) {
  MinStats local;
  MinStats& s = stats ? *stats : local;
  s = MinStats{};

  std::vector<int> everyone(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) everyone[v] = v;
  const TripartiteSlice full = make_slice(g, everyone, everyone, everyone);
  const SliceDecision any_triangle = triangle_exists(full, ledger);
  ++s.detect_calls;
  if (!any_triangle.found) return std::nullopt;

  ScalingState state;
  state.w_max = std::max(max_abs_weight(g), w_max_override.value_or(0));
  const int levels = scaling_levels(state.w_max);
  s.levels = levels;
  s.w_max = state.w_max;

  // Level `levels`: every scaled weight is zero, so any triangle is optimal.
  state.level = levels;
  state.level_min = 0;
  state.witness = {any_triangle.x, any_triangle.y, any_triangle.z, 0};

  for (int k = levels - 1; k >= 0; --k) {
    const WeightedGraph<std::int64_t> scaled = scaled_graph(g, k, state.w_max);
    std::optional<std::int64_t> found_min;
    for (std::int64_t d = 0; d <= 3; ++d) {
      const std::int64_t candidate = 2 * state.level_min + d;
      const auto witness = detect<std::int64_t>(scaled, candidate, ledger);
      ++s.detect_calls;
      if (witness) {
        found_min = candidate;
        state.witness = {witness->x, witness->y, witness->z, candidate};
        break;
      }
    }
    if (!found_min)
      throw std::logic_error(
          "min_triangle: no candidate target succeeded at a scaling level");
    if (*found_min < 2 * state.level_min || *found_min > 2 * state.level_min + 3)
      throw std::logic_error("min_triangle: level window invariant violated");
    state.level = k;
    state.level_min = *found_min;
  }

  const std::int64_t minimum = state.level_min - 3 * state.w_max;
  const std::int64_t true_sum = g.weight(state.witness.x) +
                                g.weight(state.witness.y) +
                                g.weight(state.witness.z);
  if (true_sum != minimum)
    throw std::logic_error("min_triangle: witness sum differs from the minimum");
  TriangleWitness<std::int64_t> witness{state.witness.x, state.witness.y,
                                        state.witness.z, minimum};
  return std::make_pair(witness, minimum);
}

}  // namespace nwt
