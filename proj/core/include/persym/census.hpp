#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>

#include "persym/bigint.hpp"
#include "persym/count_table.hpp"
#include "persym/dyadic.hpp"
#include "persym/errors.hpp"

namespace persym {

// Knobs shared by every exhaustive enumeration.
//
// A coset representative with N free coefficients is the N-bit integer whose
// bit b (least significant first) is the (b+1)-th free coefficient: alpha_{l+b}
// for single-series censuses, then the eta blocks in order for stacked ones.
// Workers own disjoint chunks of this index range and merge private tallies,
// so results do not depend on `threads` or `chunk_bits`.
struct CensusOptions {
  unsigned budget_bits = 28;  // refuse domains larger than 2^budget_bits
  unsigned threads = 0;       // 0: std::thread::hardware_concurrency()
  unsigned chunk_bits = 18;   // checkpoint granularity
  std::optional<std::filesystem::path> checkpoint;
};

// Gamma_i^{s x k}: persymmetric s x k matrices by rank.
RankTable enum_gamma(std::size_t s, std::size_t k, const CensusOptions& opts = {});

// #(j1 j2 / j3 j4) over the 2^{n+m-1} cosets of P_{l-1}/P_{l+n+m-2}.
ProfileTable enum_quadruple(std::size_t l, std::size_t n, std::size_t m, const CensusOptions& opts = {});

// (t, eta) pairs split by whether the eta row keeps the rank of the
// (1+m) x k persymmetric block (`equal`, sigma_{i,i}) or raises it
// (`increment`, sigma_{i-1,i}). Both tables are keyed by the stacked rank i.
struct SigmaTables {
  RankTable equal;
  RankTable increment;
};
SigmaTables enum_sigma(std::size_t m, std::size_t k, const CensusOptions& opts = {});

// Gamma_i^{[n/(1+m)] x k}: stacked matrices by rank over the full
// (k+m) + n*k bit product grid.
RankTable enum_stacked_gamma(std::size_t n, std::size_t m, std::size_t k, const CensusOptions& opts = {});

// All rows x cols matrices over F2 by rank (no structure imposed).
RankTable enum_matrices(std::size_t rows, std::size_t cols, const CensusOptions& opts = {});

// Haar integral of a function constant on cosets of depth N:
// 2^{-N} * sum of the 2^N values. Keys must be exactly 0 .. 2^N - 1.
DyadicRational integrate_coset(const std::map<std::uint64_t, BigInt>& values, unsigned depth);

// Same integral with the values produced on the fly.
template <class Fn>
DyadicRational integrate_over_cosets(unsigned depth, Fn&& value_at) {
  if (depth > 40) throw BudgetExceeded("integrate_over_cosets: depth " + std::to_string(depth));
  BigInt sum = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << depth); ++x) sum += value_at(x);
  return DyadicRational(sum, -static_cast<std::int64_t>(depth));
}

// Number of (Y_i, Z_i) with sum Y_i Z_i = 0, deg Y_i <= k-1, deg Z_i <= s-1,
// from the rank distribution: 2^{(q-1)(k+s)+1} sum_i Gamma_i 2^{-qi}.
// Throws NonIntegerResult if the table is inconsistent.
BigInt repcount_formula(unsigned q, std::size_t s, std::size_t k, const RankTable& gamma);

// Stacked analogue with n extra bilinear equations:
// 2^{q(k+m+n+1)-(n+1)k-m} sum_i Gamma_i^{[n/(1+m)] x k} 2^{-iq}.
BigInt repcount_multi_formula(unsigned q, std::size_t n, std::size_t k, std::size_t m,
                              const RankTable& stacked_gamma);

// Literal count of tuples (Y_i, Z_i, U_j^{(i)}), deg Y_i <= k-1, deg Z_i <= m,
// U_j^{(i)} in {0, 1}, with sum_i Y_i Z_i = 0 and sum_i Y_i U_j^{(i)} = 0 for every j.
BigInt repcount_bruteforce(unsigned q, std::size_t n, std::size_t k, std::size_t m, const CensusOptions& opts = {});

}  // namespace persym
