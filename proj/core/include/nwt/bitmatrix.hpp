#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nwt {

// Row-major 0/1 matrix packed into 64-bit words. Padding bits past column
// `cols` in each row are kept zero by every operation.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows),
        cols_(cols),
        stride_((cols + kWordBits - 1) / kWordBits),
        data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    data_[i * stride_ + j / kWordBits] |= Word{1} << (j % kWordBits);
  }
  void clear(std::size_t i, std::size_t j) {
    data_[i * stride_ + j / kWordBits] &= ~(Word{1} << (j % kWordBits));
  }

  Word* row(std::size_t i) { return data_.data() + i * stride_; }
  const Word* row(std::size_t i) const { return data_.data() + i * stride_; }

  // Column index of the first set bit in row i at or after `from`, or npos.
  std::size_t row_find_first(std::size_t i, std::size_t from = 0) const;

  bool any() const;
  std::uint64_t count_ones() const;
  BitMatrix transposed() const;
  static BitMatrix identity(std::size_t n);

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace nwt
