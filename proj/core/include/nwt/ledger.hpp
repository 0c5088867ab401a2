#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nwt {

// Instrumentation for the matrix layer. Every Boolean product and every
// slice-level triangle call is recorded with its dimensions. word_ops counts
// 64-bit OR/AND/popcount operations only, never scalar bookkeeping, so the
// totals track the matrix-multiplication work the quadratic budget models.
class CostLedger {
 public:
  struct ProductCall {
    std::size_t rows, inner, cols;
    std::uint64_t word_ops;
  };
  struct SliceCall {
    std::size_t x, y, z;
    std::uint64_t word_ops;
  };

  void record_product(std::size_t rows, std::size_t inner, std::size_t cols,
                      std::uint64_t ops) {
    products_.push_back({rows, inner, cols, ops});
    product_word_ops_ += ops;
    word_ops_ += ops;
  }

  // Word operations performed outside a product (filter passes, popcounts).
  void record_loose_ops(std::uint64_t ops) { word_ops_ += ops; }

  // `ops` is the subtotal consumed by the slice call; its products and loose
  // ops were already counted above, so this only files the per-call record.
  void record_slice(std::size_t x, std::size_t y, std::size_t z,
                    std::uint64_t ops) {
    slices_.push_back({x, y, z, ops});
    slice_word_ops_ += ops;
    slice_dim_sum_ += static_cast<std::uint64_t>(x) * y +
                      static_cast<std::uint64_t>(y) * z +
                      static_cast<std::uint64_t>(x) * z;
  }

  std::uint64_t total_word_ops() const { return word_ops_; }
  std::uint64_t product_word_ops() const { return product_word_ops_; }
  std::uint64_t slice_word_ops() const { return slice_word_ops_; }

  // Sum over slice calls of |X||Y| + |Y||Z| + |X||Z|, the quantity bounded
  // by the quadratic budget.
  std::uint64_t slice_dim_sum() const { return slice_dim_sum_; }

  const std::vector<ProductCall>& products() const { return products_; }
  const std::vector<SliceCall>& slices() const { return slices_; }

 private:
  std::vector<ProductCall> products_;
  std::vector<SliceCall> slices_;
  std::uint64_t word_ops_ = 0;
  std::uint64_t product_word_ops_ = 0;
  std::uint64_t slice_word_ops_ = 0;
  std::uint64_t slice_dim_sum_ = 0;
};

}  // namespace nwt
