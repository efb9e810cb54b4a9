#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace persym {

// Dense matrix over F2 with row-major, word-packed rows. Bit j of a row lives
// in word j / 64 at position j % 64; bits past cols() are always zero.
// Values are immutable once constructed.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  // Entries given row by row as 0/1 integers; every row must have the same length.
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);

  // Builds a rows x cols matrix whose entry (i, j) is fn(i, j).
  template <class Fn>
  static BitMatrix generate(std::size_t rows, std::size_t cols, Fn&& fn) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (fn(i, j)) m.set(i, j);
    return m;
  }

  // Single-word rows; requires cols <= 64. High bits beyond cols are masked off.
  static BitMatrix from_row_words(std::size_t cols, std::span<const Word> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t i, std::size_t j) const;
  std::span<const Word> row(std::size_t i) const;

  // Top-left corner of the given shape.
  BitMatrix corner(std::size_t rows, std::size_t cols) const;

  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  void set(std::size_t i, std::size_t j);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

// Row rank over F2. Works on a private copy.
std::size_t rank(const BitMatrix& m);

// cols - rank: log2 of the number of x with Mx = 0.
std::size_t kernel_dimension(const BitMatrix& m);

BitMatrix transpose(const BitMatrix& m);

// Rank of a set of single-word rows, destroying their contents. This is the
// hot path for exhaustive censuses; pivots are the lowest set column.
std::size_t rank_of_words(std::span<BitMatrix::Word> rows) noexcept;

}  // namespace persym
