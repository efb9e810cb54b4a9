#include "persym/hankel.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "persym/errors.hpp"

namespace persym {

bool RankProfile::is_consistent() const noexcept {
  return j1 <= j2 && j1 <= j3 && j2 <= j4 && j3 <= j4 && j2 <= j1 + 1 && j3 <= j1 + 1 && j4 <= j2 + 1 &&
         j4 <= j3 + 1;
}

std::string RankProfile::to_key() const {
  return std::to_string(j1) + "," + std::to_string(j2) + "," + std::to_string(j3) + "," + std::to_string(j4);
}

RankProfile RankProfile::from_key(std::string_view key) {
  std::size_t parts[4];
  const char* p = key.data();
  const char* end = key.data() + key.size();
  for (int i = 0; i < 4; ++i) {
    auto [next, ec] = std::from_chars(p, end, parts[i]);
    if (ec != std::errc{}) throw ParseError("bad rank profile key '" + std::string(key) + "'");
    p = next;
    if (i < 3) {
      if (p == end || *p != ',') throw ParseError("bad rank profile key '" + std::string(key) + "'");
      ++p;
    }
  }
  if (p != end) throw ParseError("bad rank profile key '" + std::string(key) + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

BitMatrix hankel(const UnitSeries& t, std::size_t l, std::size_t n, std::size_t m) {
  if (l == 0) throw std::invalid_argument("hankel: l must be >= 1");
  if (n > 0 && m > 0 && t.precision() < l + n + m - 2)
    throw InsufficientPrecision("hankel: needs precision " + std::to_string(l + n + m - 2) + ", series has " +
                                std::to_string(t.precision()));
  return BitMatrix::generate(n, m, [&](std::size_t i, std::size_t j) { return t.coeff(l + i + j); });
}

BitMatrix stacked(const UnitSeries& t, std::span<const UnitSeries> etas, std::size_t m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("stacked: k must be >= 1");
  if (t.precision() < k + m)
    throw InsufficientPrecision("stacked: t needs precision " + std::to_string(k + m));
  for (const auto& eta : etas)
    if (eta.precision() < k) throw InsufficientPrecision("stacked: eta needs precision " + std::to_string(k));
  const std::size_t top = 1 + m;
  return BitMatrix::generate(top + etas.size(), k, [&](std::size_t i, std::size_t j) {
    return i < top ? t.coeff(1 + i + j) : etas[i - top].coeff(1 + j);
  });
}

RankProfile rank_profile(const UnitSeries& t, std::size_t l, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("rank_profile: n and m must be >= 1");
  const BitMatrix d = hankel(t, l, n, m);
  return {rank(d.corner(n - 1, m - 1)), rank(d.corner(n - 1, m)), rank(d.corner(n, m - 1)), rank(d)};
}

bool is_persymmetric(const BitMatrix& m) {
  for (std::size_t i = 0; i + 1 < m.rows(); ++i)
    for (std::size_t j = 0; j + 1 < m.cols(); ++j)
      if (m.get(i, j + 1) != m.get(i + 1, j)) return false;
  return true;
}

}  // namespace persym
