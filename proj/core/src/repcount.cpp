#include <string>

#include "persym/census.hpp"
#include "tally.hpp"

namespace persym {

namespace {

using Word = std::uint64_t;

constexpr Word mask(std::size_t bits) { return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1; }

Word clmul(Word a, Word b) {
  Word r = 0;
  for (; b != 0; b &= b - 1) r ^= a << __builtin_ctzll(b);
  return r;
}

DyadicRational weighted_sum(const RankTable& table, unsigned q) {
  DyadicRational sum = 0;
  for (const auto& [i, count] : table)
    sum += DyadicRational(count) * DyadicRational::pow2(-static_cast<std::int64_t>(q) * static_cast<std::int64_t>(i));
  return sum;
}

}  // namespace

BigInt repcount_formula(unsigned q, std::size_t s, std::size_t k, const RankTable& gamma) {
  if (q == 0) throw std::invalid_argument("repcount_formula: q must be positive");
  const auto e = static_cast<std::int64_t>((q - 1) * (k + s) + 1);
  return (DyadicRational::pow2(e) * weighted_sum(gamma, q)).to_integer();
}

BigInt repcount_multi_formula(unsigned q, std::size_t n, std::size_t k, std::size_t m, const RankTable& stacked_gamma) {
  if (q == 0) throw std::invalid_argument("repcount_multi_formula: q must be positive");
  const auto e = static_cast<std::int64_t>(q * (k + m + n + 1)) - static_cast<std::int64_t>((n + 1) * k + m);
  return (DyadicRational::pow2(e) * weighted_sum(stacked_gamma, q)).to_integer();
}

BigInt repcount_bruteforce(unsigned q, std::size_t n, std::size_t k, std::size_t m, const CensusOptions& opts) {
  if (q == 0 || k == 0) throw std::invalid_argument("repcount_bruteforce: q and k must be positive");
  // Per index i the tuple holds Y_i (k bits), Z_i (m+1 bits), then U_1^{(i)} .. U_n^{(i)}.
  const std::size_t width = k + m + 1 + n;
  const std::size_t bits = q * width;
  detail::check_budget(static_cast<unsigned>(std::min<std::size_t>(bits, 999)), opts, "repcount_bruteforce");

  detail::TallySpec spec{"repcount q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             " m=" + std::to_string(m),
                         static_cast<unsigned>(bits), 2,
                         [](std::size_t key) { return std::string(key ? "solution" : "other"); }};
  auto counts = detail::run_tally(spec, opts, [=](Word x) -> std::size_t {
    Word yz = 0;
    Word u_sums[64] = {};
    for (std::size_t i = 0; i < q; ++i) {
      const Word block = x >> (i * width);
      const Word y = block & mask(k);
      const Word z = (block >> k) & mask(m + 1);
      yz ^= clmul(y, z);
      for (std::size_t j = 0; j < n; ++j)
        if ((block >> (k + m + 1 + j)) & 1) u_sums[j] ^= y;
    }
    if (yz != 0) return 0;
    for (std::size_t j = 0; j < n; ++j)
      if (u_sums[j] != 0) return 0;
    return 1;
  });
  return counts[1];
}

}  // namespace persym
