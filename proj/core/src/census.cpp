#include "persym/census.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "persym/bit_matrix.hpp"
#include "tally.hpp"

namespace persym {

namespace {

using detail::run_tally;
using detail::TallySpec;
using Word = BitMatrix::Word;

constexpr Word mask(std::size_t bits) { return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1; }

// Rank of the rows x cols persymmetric block whose entry (i, j) is bit i + j of x.
std::size_t hankel_rank(Word x, std::size_t rows, std::size_t cols) {
  std::array<Word, 64> buf{};
  for (std::size_t i = 0; i < rows; ++i) buf[i] = (x >> i) & mask(cols);
  return rank_of_words(std::span(buf.data(), rows));
}

RankTable to_rank_table(const std::vector<std::uint64_t>& counts) {
  RankTable t;
  for (std::size_t i = 0; i < counts.size(); ++i) t.add(i, counts[i]);
  return t;
}

std::string rank_name(std::size_t i) { return std::to_string(i); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

RankTable enum_gamma(std::size_t s, std::size_t k, const CensusOptions& opts) {
  require(s >= 1 && k >= 1, "enum_gamma: s and k must be positive");
  detail::check_budget(static_cast<unsigned>(std::min<std::size_t>(k + s - 1, 999)), opts, "enum_gamma");
  TallySpec spec{"gamma s=" + std::to_string(s) + " k=" + std::to_string(k),
                 static_cast<unsigned>(k + s - 1), std::min(s, k) + 1, rank_name};
  return to_rank_table(run_tally(spec, opts, [s, k](Word x) { return hankel_rank(x, s, k); }));
}

ProfileTable enum_quadruple(std::size_t l, std::size_t n, std::size_t m, const CensusOptions& opts) {
  require(l >= 1 && n >= 1 && m >= 1, "enum_quadruple: l, n, m must be positive");
  detail::check_budget(static_cast<unsigned>(std::min<std::size_t>(n + m - 1, 999)), opts, "enum_quadruple");
  // The representative fixes alpha_l .. alpha_{l+n+m-2}; the block only ever
  // sees those, so l does not enter the classification.
  const std::size_t base = std::min(n, m) + 1;
  auto decode = [base](std::size_t key) {
    RankProfile p;
    p.j4 = key % base;
    key /= base;
    p.j3 = key % base;
    key /= base;
    p.j2 = key % base;
    p.j1 = key / base;
    return p;
  };
  TallySpec spec{"quad l=" + std::to_string(l) + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                 static_cast<unsigned>(n + m - 1), base * base * base * base,
                 [decode](std::size_t key) { return decode(key).to_key(); }};
  auto counts = run_tally(spec, opts, [n, m, base](Word x) {
    std::array<Word, 64> buf{};
    auto corner = [&](std::size_t rows, std::size_t cols) -> std::size_t {
      if (rows == 0 || cols == 0) return 0;
      for (std::size_t i = 0; i < rows; ++i) buf[i] = (x >> i) & mask(cols);
      return rank_of_words(std::span(buf.data(), rows));
    };
    const std::size_t j1 = corner(n - 1, m - 1);
    const std::size_t j2 = corner(n - 1, m);
    const std::size_t j3 = corner(n, m - 1);
    const std::size_t j4 = corner(n, m);
    return ((j1 * base + j2) * base + j3) * base + j4;
  });
  ProfileTable table;
  for (std::size_t key = 0; key < counts.size(); ++key) table.add(decode(key), counts[key]);
  return table;
}

SigmaTables enum_sigma(std::size_t m, std::size_t k, const CensusOptions& opts) {
  require(k >= 1, "enum_sigma: k must be positive");
  detail::check_budget(static_cast<unsigned>(std::min<std::size_t>(2 * k + m, 999)), opts, "enum_sigma");
  require(m + 2 <= 64, "enum_sigma: too many rows");
  const std::size_t ranks = std::min(k, m + 2) + 1;
  TallySpec spec{"sigma m=" + std::to_string(m) + " k=" + std::to_string(k), static_cast<unsigned>(2 * k + m),
                 2 * ranks, [](std::size_t key) { return std::to_string(key / 2) + (key % 2 ? "+" : "="); }};
  auto counts = run_tally(spec, opts, [m, k](Word x) {
    std::array<Word, 64> buf{};
    for (std::size_t i = 0; i <= m; ++i) buf[i] = (x >> i) & mask(k);
    const std::size_t top = rank_of_words(std::span(buf.data(), m + 1));
    for (std::size_t i = 0; i <= m; ++i) buf[i] = (x >> i) & mask(k);
    buf[m + 1] = (x >> (k + m)) & mask(k);
    const std::size_t full = rank_of_words(std::span(buf.data(), m + 2));
    return full * 2 + (full - top);
  });
  SigmaTables out;
  for (std::size_t key = 0; key < counts.size(); ++key)
    (key % 2 ? out.increment : out.equal).add(key / 2, counts[key]);
  return out;
}

RankTable enum_stacked_gamma(std::size_t n, std::size_t m, std::size_t k, const CensusOptions& opts) {
  require(k >= 1, "enum_stacked_gamma: k must be positive");
  const std::size_t bits = k + m + n * k;
  detail::check_budget(static_cast<unsigned>(std::min<std::size_t>(bits, 999)), opts, "enum_stacked_gamma");
  require(1 + m + n <= 64, "enum_stacked_gamma: too many rows");
  TallySpec spec{"stacked n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k),
                 static_cast<unsigned>(bits), std::min(k, 1 + m + n) + 1, rank_name};
  return to_rank_table(run_tally(spec, opts, [n, m, k](Word x) {
    std::array<Word, 64> buf{};
    for (std::size_t i = 0; i <= m; ++i) buf[i] = (x >> i) & mask(k);
    for (std::size_t j = 0; j < n; ++j) buf[m + 1 + j] = (x >> (k + m + j * k)) & mask(k);
    return rank_of_words(std::span(buf.data(), 1 + m + n));
  }));
}

RankTable enum_matrices(std::size_t rows, std::size_t cols, const CensusOptions& opts) {
  require(rows >= 1 && cols >= 1 && rows <= 64 && cols <= 64, "enum_matrices: shape out of range");
  const std::size_t bits = rows * cols;
  detail::check_budget(static_cast<unsigned>(std::min<std::size_t>(bits, 999)), opts, "enum_matrices");
  TallySpec spec{"matrices rows=" + std::to_string(rows) + " cols=" + std::to_string(cols),
                 static_cast<unsigned>(bits), std::min(rows, cols) + 1, rank_name};
  return to_rank_table(run_tally(spec, opts, [rows, cols](Word x) {
    std::array<Word, 64> buf{};
    for (std::size_t i = 0; i < rows; ++i) buf[i] = (x >> (i * cols)) & mask(cols);
    return rank_of_words(std::span(buf.data(), rows));
  }));
}

DyadicRational integrate_coset(const std::map<std::uint64_t, BigInt>& values, unsigned depth) {
  if (depth > 63) throw IncompleteDomain("integrate_coset: depth " + std::to_string(depth) + " is not enumerable");
  const std::uint64_t want = std::uint64_t{1} << depth;
  if (values.size() != want || (!values.empty() && values.rbegin()->first >= want))
    throw IncompleteDomain("integrate_coset: expected all " + std::to_string(want) + " representatives, got " +
                           std::to_string(values.size()));
  BigInt sum = 0;
  for (const auto& [x, v] : values) sum += v;
  return DyadicRational(sum, -static_cast<std::int64_t>(depth));
}

}  // namespace persym
