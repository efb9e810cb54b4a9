#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "persym/bit_matrix.hpp"
#include "support.hpp"

using namespace persym;

namespace {

// Square submatrix is invertible iff only x = 0 solves Ax = 0; checked by trying every x.
bool invertible(const BitMatrix& m, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
  const std::size_t r = rs.size();
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << r); ++x) {
    bool zero = true;
    for (std::size_t i = 0; i < r && zero; ++i) {
      bool acc = false;
      for (std::size_t j = 0; j < r; ++j)
        if ((x >> j) & 1) acc ^= m.get(rs[i], cs[j]);
      zero = !acc;
    }
    if (zero) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Largest r with a nonsingular r x r minor.
std::size_t minor_rank(const BitMatrix& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r)
    for (const auto& rs : subsets(m.rows(), r))
      for (const auto& cs : subsets(m.cols(), r))
        if (invertible(m, rs, cs)) return r;
  return 0;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
  CHECK(rank(BitMatrix(3, 3)) == 0);
  CHECK(rank(BitMatrix::identity(3)) == 3);
  BitMatrix m{{1, 0, 1}, {0, 1, 0}};
  CHECK(rank(m) == 2);
  CHECK(rank(BitMatrix{{1, 1}, {1, 1}}) == 1);
  CHECK(rank(BitMatrix(0, 5)) == 0);
  CHECK(rank(BitMatrix(4, 0)) == 0);
}

TEST_CASE("kernel dimension") {
  CHECK(kernel_dimension(BitMatrix(3, 3)) == 3);
  CHECK(kernel_dimension(BitMatrix::identity(3)) == 0);
  CHECK(kernel_dimension(BitMatrix{{1, 0, 1}, {0, 1, 0}}) == 1);
}

TEST_CASE("transpose") {
  BitMatrix m{{1, 0, 1}, {0, 1, 0}};
  CHECK(transpose(m) == BitMatrix{{1, 0}, {0, 1}, {1, 0}});
  auto t = transpose(BitMatrix(0, 5));
  CHECK(t.rows() == 5);
  CHECK(t.cols() == 0);
  CHECK(transpose(BitMatrix::identity(7)) == BitMatrix::identity(7));
}

TEST_CASE("construction errors and accessors") {
  CHECK_THROWS_AS(BitMatrix({{1, 0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(BitMatrix({{2}}), std::invalid_argument);
  BitMatrix m{{1, 0, 1}, {0, 1, 1}};
  CHECK(m.get(1, 2));
  CHECK_FALSE(m.get(0, 1));
  CHECK_THROWS_AS((void)m.get(2, 0), std::out_of_range);
  CHECK(m.corner(1, 2) == BitMatrix{{1, 0}});
  CHECK(m.corner(0, 2).empty());
  CHECK_THROWS_AS((void)m.corner(3, 1), std::out_of_range);
}

TEST_CASE("from_row_words masks high bits") {
  const BitMatrix::Word rows[] = {0b1111, 0b0010};
  auto m = BitMatrix::from_row_words(2, rows);
  CHECK(m == BitMatrix{{1, 1}, {0, 1}});
}

TEST_CASE("rank agrees with the minor oracle up to 4x4") {
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = test::uniform(0, 4), c = test::uniform(0, 4);
    const auto m = test::random_matrix(r, c);
    CAPTURE(m.to_string());
    CHECK(rank(m) == minor_rank(m));
  }
}

TEST_CASE("rank is transpose invariant and complements the kernel") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = test::uniform(0, 140), c = test::uniform(0, 140);
    const auto m = test::random_matrix(r, c);
    const auto rk = rank(m);
    CHECK(rk <= std::min(r, c));
    CHECK(rk == rank(transpose(m)));
    CHECK(kernel_dimension(m) + rk == c);
  }
}

TEST_CASE("multi-word rank of structured matrices") {
  // Duplicated rows across a word boundary.
  const std::size_t cols = 150;
  auto base = test::random_matrix(40, cols);
  auto doubled = BitMatrix::generate(80, cols, [&](std::size_t i, std::size_t j) { return base.get(i % 40, j); });
  CHECK(rank(doubled) == rank(base));
  CHECK(rank(BitMatrix::identity(130)) == 130);
  auto last_col = BitMatrix::generate(5, cols, [](std::size_t, std::size_t j) { return j == 149; });
  CHECK(rank(last_col) == 1);
}

TEST_CASE("word rank matches matrix rank") {
  for (int trial = 0; trial < 500; ++trial) {
    const auto r = test::uniform(1, 12), c = test::uniform(1, 64);
    std::vector<BitMatrix::Word> words(r);
    for (auto& w : words) w = test::rng()() & (c == 64 ? ~0ULL : (1ULL << c) - 1);
    const auto m = BitMatrix::from_row_words(c, words);
    CHECK(rank_of_words(words) == rank(m));
  }
}
