#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "persym/bit_matrix.hpp"
#include "persym/laurent.hpp"

namespace persym {

// Ranks of the four nested corner blocks of an n x m matrix D:
// (n-1)x(m-1), (n-1)x m, n x(m-1), n x m.
struct RankProfile {
  std::size_t j1 = 0;
  std::size_t j2 = 0;
  std::size_t j3 = 0;
  std::size_t j4 = 0;

  // Deleting one row or column changes the rank by at most one.
  bool is_consistent() const noexcept;

  // "j1,j2,j3,j4"
  std::string to_key() const;
  static RankProfile from_key(std::string_view key);

  friend auto operator<=>(const RankProfile&, const RankProfile&) = default;
};

// n x m persymmetric matrix with entry (i, j) = alpha_{l+i+j} (0-based i, j).
BitMatrix hankel(const UnitSeries& t, std::size_t l, std::size_t n, std::size_t m);

// (1+m+n) x k matrix: hankel(t, 1, 1+m, k) on top, then one row per eta holding
// its first k coefficients.
BitMatrix stacked(const UnitSeries& t, std::span<const UnitSeries> etas, std::size_t m, std::size_t k);

RankProfile rank_profile(const UnitSeries& t, std::size_t l, std::size_t n, std::size_t m);

// entry(i, j) depends only on i + j.
bool is_persymmetric(const BitMatrix& m);

}  // namespace persym
