#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "nwt/bitmatrix.hpp"
#include "nwt/ledger.hpp"
#include "nwt/slice.hpp"

namespace nwt {

// Boolean matrix product: C[i][j] = OR over t of (A[i][t] AND B[t][j]).
// Kernel is the word-parallel row-OR method with 256-row cache tiles; when
// cols > rows, B is processed as column blocks of width <= rows, each
// multiplied independently and the results concatenated. The ledger records
// the call dimensions and the 64-bit word operations performed. Results are
// bit-identical for every thread count. Throws on inner-dimension mismatch.
BitMatrix bool_product(const BitMatrix& a, const BitMatrix& b,
                       CostLedger& ledger);

// Outcome of one tripartite triangle query; witness ids are in source-graph
// numbering and, when found, the three cross-edges exist in the slice.
struct SliceDecision {
  bool found = false;
  int x = -1;
  int y = -1;
  int z = -1;
};

// Unweighted triangle existence over a tripartite slice: found iff some
// (x, y, z) in X x Y x Z has all three cross-edges. The witness is located
// from a set bit of (adj_xy . adj_yz) AND adj_xz, scanning X ascending, then
// Z, then Y, so repeated runs return the same triple.
SliceDecision triangle_exists(const TripartiteSlice& slice, CostLedger& ledger);

// Number of role-assigned triples (x, y, z) in X x Y x Z with all three
// cross-edges, counted with role multiplicity. Computed as the sum over
// adj_xz pairs of popcount(row_Y(x) AND row_Y(z)). Rejects inputs whose
// worst-case count could overflow the 64-bit accumulator.
std::uint64_t triangle_count_assigned(const TripartiteSlice& slice,
                                      CostLedger& ledger);

// Unordered triangles with all three vertices inside S: the assigned count
// of the (S, S, S) slice divided by 6.
template <class W>
std::uint64_t triangle_count_within(const WeightedGraph<W>& g,
                                    std::span<const int> s,
                                    CostLedger& ledger) {
  const TripartiteSlice slice = make_slice(g, s, s, s);
  const std::uint64_t assigned = triangle_count_assigned(slice, ledger);
  if (assigned % 6 != 0)
    throw std::logic_error(
        "triangle_count_within: assigned count of an (S,S,S) slice must be "
        "divisible by 6");
  return assigned / 6;
}

}  // namespace nwt
