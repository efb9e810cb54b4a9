#include "persym/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace persym {

namespace {

constexpr std::size_t words_for(std::size_t cols) {
  return (cols + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits;
}

constexpr BitMatrix::Word low_mask(std::size_t bits) {
  return bits >= BitMatrix::kWordBits ? ~BitMatrix::Word{0}
                                      : (BitMatrix::Word{1} << bits) - 1;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  stride_ = words_for(cols_);
  data_.assign(rows_ * stride_, 0);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
    std::size_t j = 0;
    for (int v : r) {
      if (v != 0 && v != 1) throw std::invalid_argument("BitMatrix: entries must be 0 or 1");
      if (v) set(i, j);
      ++j;
    }
    ++i;
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_row_words(std::size_t cols, std::span<const Word> rows) {
  if (cols > kWordBits) throw std::invalid_argument("from_row_words: cols > 64");
  BitMatrix m(rows.size(), cols);
  if (cols == 0) return m;
  const Word mask = low_mask(cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.data_[i] = rows[i] & mask;
  return m;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("BitMatrix::get");
  return (data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
}

std::span<const BitMatrix::Word> BitMatrix::row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("BitMatrix::row");
  return {data_.data() + i * stride_, stride_};
}

void BitMatrix::set(std::size_t i, std::size_t j) {
  data_[i * stride_ + j / kWordBits] |= Word{1} << (j % kWordBits);
}

BitMatrix BitMatrix::corner(std::size_t rows, std::size_t cols) const {
  if (rows > rows_ || cols > cols_) throw std::out_of_range("BitMatrix::corner");
  BitMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t w = 0; w < out.stride_; ++w) out.data_[i * out.stride_ + w] = data_[i * stride_ + w];
    if (out.stride_ > 0) out.data_[i * out.stride_ + out.stride_ - 1] &= low_mask(cols - (out.stride_ - 1) * kWordBits);
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s.push_back(get(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

std::size_t rank_of_words(std::span<BitMatrix::Word> rows) noexcept {
  // basis[p] holds the reduced vector whose lowest set bit is p.
  BitMatrix::Word basis[BitMatrix::kWordBits];
  BitMatrix::Word occupied = 0;
  std::size_t r = 0;
  for (BitMatrix::Word x : rows) {
    while (x != 0) {
      const int p = std::countr_zero(x);
      if ((occupied >> p) & 1U) {
        x ^= basis[p];
      } else {
        basis[p] = x;
        occupied |= BitMatrix::Word{1} << p;
        ++r;
        break;
      }
    }
  }
  return r;
}

std::size_t rank(const BitMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t stride = m.words_per_row();
  std::vector<BitMatrix::Word> work;
  work.reserve(m.rows() * stride);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    work.insert(work.end(), r.begin(), r.end());
  }
  if (stride == 1) return rank_of_words(work);

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    const std::size_t w = col / BitMatrix::kWordBits;
    const BitMatrix::Word bit = BitMatrix::Word{1} << (col % BitMatrix::kWordBits);
    std::size_t found = pivot_row;
    while (found < m.rows() && !(work[found * stride + w] & bit)) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row)
      std::swap_ranges(work.begin() + found * stride, work.begin() + (found + 1) * stride,
                       work.begin() + pivot_row * stride);
    for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
      if (work[i * stride + w] & bit)
        for (std::size_t k = w; k < stride; ++k) work[i * stride + k] ^= work[pivot_row * stride + k];
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t kernel_dimension(const BitMatrix& m) { return m.cols() - rank(m); }

BitMatrix transpose(const BitMatrix& m) {
  return BitMatrix::generate(m.cols(), m.rows(), [&](std::size_t i, std::size_t j) { return m.get(j, i); });
}

}  // namespace persym
