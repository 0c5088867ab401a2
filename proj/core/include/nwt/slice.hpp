#pragma once

#include <span>
#include <vector>

#include "nwt/bitmatrix.hpp"
#include "nwt/graph.hpp"

namespace nwt {

// Three vertex roles X, Y, Z with the cross-role adjacency between them.
// Id lists carry no duplicates within a list but may overlap across roles;
// the triangle primitives treat roles as distinct copies. Every set bit
// corresponds to an edge of the source graph.
struct TripartiteSlice {
  std::vector<int> x_ids;
  std::vector<int> y_ids;
  std::vector<int> z_ids;
  BitMatrix adj_xy;  // |X| x |Y|
  BitMatrix adj_yz;  // |Y| x |Z|
  BitMatrix adj_xz;  // |X| x |Z|
};

// Slice over explicit id lists. keep_yz further restricts Y-Z pairs beyond
// edge membership; X-Y and X-Z carry plain edges.
template <class W, class KeepYZ>
TripartiteSlice make_slice(const WeightedGraph<W>& g, std::span<const int> xs,
                           std::span<const int> ys, std::span<const int> zs,
                           KeepYZ&& keep_yz) {
  TripartiteSlice s;
  s.x_ids.assign(xs.begin(), xs.end());
  s.y_ids.assign(ys.begin(), ys.end());
  s.z_ids.assign(zs.begin(), zs.end());
  s.adj_xy = BitMatrix(xs.size(), ys.size());
  s.adj_yz = BitMatrix(ys.size(), zs.size());
  s.adj_xz = BitMatrix(xs.size(), zs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (g.has_edge(xs[i], ys[j])) s.adj_xy.set(i, j);
    for (std::size_t j = 0; j < zs.size(); ++j)
      if (g.has_edge(xs[i], zs[j])) s.adj_xz.set(i, j);
  }
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < zs.size(); ++j)
      if (g.has_edge(ys[i], zs[j]) && keep_yz(ys[i], zs[j])) s.adj_yz.set(i, j);
  return s;
}

template <class W>
TripartiteSlice make_slice(const WeightedGraph<W>& g, std::span<const int> xs,
                           std::span<const int> ys, std::span<const int> zs) {
  return make_slice(g, xs, ys, zs, [](int, int) { return true; });
}

// Slice whose role lists are the predicate images, in ascending id order.
template <class W, class XP, class YP, class ZP>
TripartiteSlice build_slice(const WeightedGraph<W>& g, XP&& x_pred, YP&& y_pred,
                            ZP&& z_pred) {
  std::vector<int> xs, ys, zs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (x_pred(v)) xs.push_back(v);
    if (y_pred(v)) ys.push_back(v);
    if (z_pred(v)) zs.push_back(v);
  }
  return make_slice(g, xs, ys, zs);
}

}  // namespace nwt
