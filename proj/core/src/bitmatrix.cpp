#include "nwt/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

#include "nwt/bitlinalg.hpp"
#include "nwt/config.hpp"

namespace nwt {

std::size_t BitMatrix::row_find_first(std::size_t i, std::size_t from) const {
  const Word* r = row(i);
  std::size_t wi = from / kWordBits;
  if (wi >= stride_) return npos;
  Word w = r[wi] & (~Word{0} << (from % kWordBits));
  for (;;) {
    if (w != 0) {
      const std::size_t j = wi * kWordBits +
                            static_cast<std::size_t>(std::countr_zero(w));
      return j < cols_ ? j : npos;
    }
    if (++wi >= stride_) return npos;
    w = r[wi];
  }
}

bool BitMatrix::any() const {
  for (const Word w : data_)
    if (w != 0) return true;
  return false;
}

std::uint64_t BitMatrix::count_ones() const {
  std::uint64_t total = 0;
  for (const Word w : data_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Word* r = row(i);
    for (std::size_t wi = 0; wi < stride_; ++wi) {
      Word w = r[wi];
      while (w != 0) {
        const std::size_t j = wi * kWordBits +
                              static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        out.set(j, i);
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

namespace {

constexpr std::size_t kRowTile = 256;

// Row-OR kernel: for every set bit A[i][t], OR row t of B into row i of the
// output. Returns the word-operation count (row scans plus row ORs).
std::uint64_t multiply_rows(const BitMatrix& a, const BitMatrix& b,
                            BitMatrix& out, std::size_t row_begin,
                            std::size_t row_end) {
  const std::size_t a_stride = a.stride();
  const std::size_t b_stride = b.stride();
  std::uint64_t ops = 0;
  for (std::size_t i = row_begin; i < row_end; ++i) {
    const BitMatrix::Word* arow = a.row(i);
    BitMatrix::Word* orow = out.row(i);
    ops += a_stride;
    for (std::size_t wi = 0; wi < a_stride; ++wi) {
      BitMatrix::Word w = arow[wi];
      while (w != 0) {
        const std::size_t t =
            wi * BitMatrix::kWordBits +
            static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        const BitMatrix::Word* brow = b.row(t);
        for (std::size_t wj = 0; wj < b_stride; ++wj) orow[wj] |= brow[wj];
        ops += b_stride;
      }
    }
  }
  return ops;
}

// Rows are processed in fixed 256-row tiles; with more than one worker the
// tiles are split into contiguous chunks with disjoint output rows, so the
// result and the summed op count never depend on the thread count.
std::uint64_t multiply_tiled(const BitMatrix& a, const BitMatrix& b,
                             BitMatrix& out) {
  const std::size_t rows = a.rows();
  const std::size_t tiles = (rows + kRowTile - 1) / kRowTile;
  const std::size_t workers =
      std::min<std::size_t>(thread_count(), std::max<std::size_t>(tiles, 1));
  if (workers <= 1 || tiles <= 1) {
    std::uint64_t ops = 0;
    for (std::size_t t = 0; t < tiles; ++t)
      ops += multiply_rows(a, b, out, t * kRowTile,
                           std::min(rows, (t + 1) * kRowTile));
    return ops;
  }

  std::vector<std::uint64_t> ops(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t tiles_per_worker = (tiles + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t t0 = w * tiles_per_worker;
    const std::size_t t1 = std::min(tiles, t0 + tiles_per_worker);
    if (t0 >= t1) break;
    pool.emplace_back([&, w, t0, t1] {
      std::uint64_t local = 0;
      for (std::size_t t = t0; t < t1; ++t)
        local += multiply_rows(a, b, out, t * kRowTile,
                               std::min(rows, (t + 1) * kRowTile));
      ops[w] = local;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t total = 0;
  for (const std::uint64_t o : ops) total += o;
  return total;
}

BitMatrix extract_columns(const BitMatrix& b, std::size_t col_begin,
                          std::size_t width) {
  BitMatrix block(b.rows(), width);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = b.row_find_first(i, col_begin);
         j != BitMatrix::npos && j < col_begin + width;
         j = b.row_find_first(i, j + 1))
      block.set(i, j - col_begin);
  return block;
}

void paste_columns(BitMatrix& out, const BitMatrix& block,
                   std::size_t col_begin) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = block.row_find_first(i, 0); j != BitMatrix::npos;
         j = block.row_find_first(i, j + 1))
      out.set(i, col_begin + j);
}

}  // namespace

BitMatrix bool_product(const BitMatrix& a, const BitMatrix& b,
                       CostLedger& ledger) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("bool_product: inner dimensions mismatch");
  const std::size_t rows = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();

  BitMatrix out(rows, cols);
  std::uint64_t ops = 0;
  if (rows > 0 && inner > 0 && cols > 0) {
    if (cols > rows) {
      // Wide right factor: multiply against ceil(cols/rows) column blocks of
      // width <= rows, independently, and concatenate the results.
      for (std::size_t j0 = 0; j0 < cols; j0 += rows) {
        const std::size_t width = std::min(rows, cols - j0);
        const BitMatrix block = extract_columns(b, j0, width);
        BitMatrix part(rows, width);
        ops += multiply_tiled(a, block, part);
        paste_columns(out, part, j0);
      }
    } else {
      ops += multiply_tiled(a, b, out);
    }
  }
  // The cost model charges at least one row scan per product call.
  ops = std::max<std::uint64_t>(
      ops, (inner + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits);
  ledger.record_product(rows, inner, cols, ops);
  return out;
}

}  // namespace nwt
