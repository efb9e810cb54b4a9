#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "persym/bigint.hpp"
#include "persym/dyadic.hpp"
#include "persym/hankel.hpp"

namespace persym {

// Closed-form counts. Everything here is pure and exact.

// Gamma_i^{s x k}, persymmetric s x k matrices of rank i. Arguments with
// s > k are answered through the transpose. 0 outside [0, min(s, k)].
BigInt persym_rank_count(std::size_t s, std::size_t k, std::size_t i);

// #(j1 j2 / j3 j4) for l = 1 as the five-branch table printed in the
// source, with no corrections. Requires 1 <= s <= k.
BigInt rank_profile_count(std::size_t s, std::size_t k, const RankProfile& p);

// Gamma_i^{[1/(1+m)] x k} from the one-row recurrence
// (2^k - 2^{i-1}) Gamma_{i-1}^{(1+m) x k} + 2^i Gamma_i^{(1+m) x k}.
BigInt stacked1_rank_recurrence(std::size_t m, std::size_t k, std::size_t i);

struct PrintedCase {
  std::string branch;  // e.g. "k=2", "m=1,k>=3"
  BigInt value;
};

// Every printed case table whose side condition covers (m, k), evaluated
// at i. Empty when no table applies. Requires i <= min(k, 2+m).
std::vector<PrintedCase> stacked1_printed_cases(std::size_t m, std::size_t k, std::size_t i);

// Recurrence value, cross-checked against each applicable printed table.
// Throws CaseMismatch on any disagreement.
BigInt stacked1_rank_count(std::size_t m, std::size_t k, std::size_t i);

// a_j^{(n)}: a_0 = a_n = 1, a_j^{(n)} = 2^j a_j^{(n-1)} + a_{j-1}^{(n-1)}.
BigInt a_coeff_recurrence(std::size_t n, std::size_t j);

// The alternating-sum closed form for a_j^{(n)}. Inner quotients are exact
// divisions and throw NonIntegerResult otherwise.
BigInt a_coeff_closed(std::size_t n, std::size_t j);

// Gamma_i^{[n/(1+m)] x k} as the a-coefficient combination of the
// Gamma_{i-j}^{(1+m) x k}. 0 outside [0, min(k, n+m+1)].
BigInt stacked_rank_count(std::size_t n, std::size_t m, std::size_t k, std::size_t i);

// Number of rows x k matrices over F2 of rank i (Landsberg's product).
BigInt landsberg_count(std::size_t rows, std::size_t k, std::size_t i);

// prod_{l<i} (2^{n+1} - 2^l) / (2^i - 2^l); equals a_i + 2^{n-i+1} a_{i-1}.
BigInt gaussian_binomial_2(std::size_t n_plus_1, std::size_t i);

// R_q(0, k, m) by the three-branch closed form. Requires m <= k-1, q >= 1.
BigInt repcount_closed_form(unsigned q, std::size_t k, std::size_t m);

// One term of the printed stacked expansion for n in 1..5:
//   coefficient * 2^{slope*i + offset} * prod_{l=1..j} (2^k - 2^{i-l}) * Gamma_{i-j}.
struct StackedTerm {
  std::size_t j = 0;
  BigInt coefficient;  // as printed
  long long slope = 0;
  long long offset = 0;
  BigInt a_coeff;  // a_j^{(n)} for comparison
};

std::vector<StackedTerm> stacked_coefficient_table(std::size_t n);

// coefficient * 2^{slope*i + offset} * prod_{l=1..j} (2^k - 2^{i-l}), exactly.
DyadicRational stacked_term_multiplier(const StackedTerm& term, std::size_t i, std::size_t k);

}  // namespace persym
