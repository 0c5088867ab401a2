#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

#include "nwt/bitlinalg.hpp"

namespace nwt {

namespace {

// m &= mask, row by row. Both matrices share dimensions.
std::uint64_t and_inplace(BitMatrix& m, const BitMatrix& mask) {
  std::uint64_t ops = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BitMatrix::Word* mr = m.row(i);
    const BitMatrix::Word* kr = mask.row(i);
    for (std::size_t w = 0; w < m.stride(); ++w) mr[w] &= kr[w];
    ops += m.stride();
  }
  return ops;
}

}  // namespace

SliceDecision triangle_exists(const TripartiteSlice& slice,
                              CostLedger& ledger) {
  const std::uint64_t before = ledger.total_word_ops();
  SliceDecision decision;

  // Two-path matrix x -> y -> z, closed by the x-z edge.
  BitMatrix closed = bool_product(slice.adj_xy, slice.adj_yz, ledger);
  std::uint64_t ops = and_inplace(closed, slice.adj_xz);

  for (std::size_t xi = 0; xi < closed.rows() && !decision.found; ++xi) {
    ops += closed.stride();
    const std::size_t zi = closed.row_find_first(xi);
    if (zi == BitMatrix::npos) continue;

    // Shared-neighbor word intersection: column zi of adj_yz against row xi
    // of adj_xy; the lowest set bit is the witness y.
    const std::size_t y_words = slice.adj_xy.stride();
    std::vector<BitMatrix::Word> z_col(y_words, 0);
    for (std::size_t yi = 0; yi < slice.y_ids.size(); ++yi)
      if (slice.adj_yz.get(yi, zi))
        z_col[yi / BitMatrix::kWordBits] |= BitMatrix::Word{1}
                                            << (yi % BitMatrix::kWordBits);
    ops += y_words;
    const BitMatrix::Word* x_row = slice.adj_xy.row(xi);
    for (std::size_t w = 0; w < y_words; ++w) {
      const BitMatrix::Word both = x_row[w] & z_col[w];
      ++ops;
      if (both != 0) {
        const std::size_t yi =
            w * BitMatrix::kWordBits +
            static_cast<std::size_t>(std::countr_zero(both));
        decision.found = true;
        decision.x = slice.x_ids[xi];
        decision.y = slice.y_ids[yi];
        decision.z = slice.z_ids[zi];
        break;
      }
    }
    if (!decision.found)
      throw std::logic_error("triangle_exists: closed pair without a middle y");
  }

  ledger.record_loose_ops(ops);
  ledger.record_slice(slice.x_ids.size(), slice.y_ids.size(),
                      slice.z_ids.size(), ledger.total_word_ops() - before);
  return decision;
}

std::uint64_t triangle_count_assigned(const TripartiteSlice& slice,
                                      CostLedger& ledger) {
  const std::size_t nx = slice.x_ids.size();
  const std::size_t ny = slice.y_ids.size();
  const std::size_t nz = slice.z_ids.size();
  if (nx > 0 && ny > 0 && nz > 0) {
    const unsigned __int128 worst =
        static_cast<unsigned __int128>(nx) * ny * nz;
    if (worst > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error(
          "triangle_count_assigned: count could overflow 64 bits");
  }

  const std::uint64_t before = ledger.total_word_ops();
  std::uint64_t ops = 0;

  // row_Y(z) as rows: transpose the Y-Z adjacency once.
  const BitMatrix zy = slice.adj_yz.transposed();
  ops += slice.adj_yz.rows() * slice.adj_yz.stride();

  std::uint64_t count = 0;
  const std::size_t y_words = slice.adj_xy.stride();
  for (std::size_t xi = 0; xi < nx; ++xi) {
    const BitMatrix::Word* x_row = slice.adj_xy.row(xi);
    ops += slice.adj_xz.stride();
    for (std::size_t zi = slice.adj_xz.row_find_first(xi, 0);
         zi != BitMatrix::npos; zi = slice.adj_xz.row_find_first(xi, zi + 1)) {
      const BitMatrix::Word* z_row = zy.row(zi);
      for (std::size_t w = 0; w < y_words; ++w)
        count += static_cast<std::uint64_t>(std::popcount(x_row[w] & z_row[w]));
      ops += 2 * y_words;
    }
  }

  ledger.record_loose_ops(ops);
  ledger.record_slice(nx, ny, nz, ledger.total_word_ops() - before);
  return count;
}

}  // namespace nwt
