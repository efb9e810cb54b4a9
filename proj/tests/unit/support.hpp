#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "persym/bit_matrix.hpp"
#include "persym/laurent.hpp"

namespace persym::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'2024'0b1d'cafeULL);
  return gen;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols) {
  auto& g = rng();
  return BitMatrix::generate(rows, cols, [&](std::size_t, std::size_t) { return (g() & 1) != 0; });
}

inline UnitSeries random_series(std::size_t precision) {
  UnitSeries out(0);
  for (std::size_t left = precision; left > 0;) {
    const std::size_t take = left < 64 ? left : 64;
    out = out.extended(take, rng()());
    left -= take;
  }
  return out;
}

inline Poly2 random_poly(std::size_t max_bits) {
  const std::size_t bits = uniform(0, max_bits);
  const std::uint64_t w = bits == 0 ? 0 : rng()() & ((bits == 64 ? ~0ULL : (1ULL << bits) - 1));
  return Poly2::from_word(w);
}

}  // namespace persym::test
