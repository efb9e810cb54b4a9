#include "persym/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "persym/errors.hpp"

namespace persym {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw NonIntegerResult(std::string(what) + ": " + to_string(num) + " / " + to_string(den));
  return q;
}

BigInt diff_pow2(std::size_t a, std::size_t b) { return pow2(a) - pow2(b); }

}  // namespace

BigInt persym_rank_count(std::size_t s, std::size_t k, std::size_t i) {
  if (s == 0 || k == 0) throw std::invalid_argument("persym_rank_count: s and k must be positive");
  if (s > k) std::swap(s, k);
  if (i == 0) return 1;
  if (i < s) return 3 * pow2(2 * (i - 1));
  if (i == s) return pow2(k + s - 1) - pow2(2 * s - 2);
  return 0;
}

BigInt rank_profile_count(std::size_t s, std::size_t k, const RankProfile& p) {
  if (s == 0 || s > k) throw std::invalid_argument("rank_profile_count: need 1 <= s <= k");
  const auto [j1, j2, j3, j4] = p;
  if (j1 == 0 && j2 == 0 && j3 == 0 && j4 == 0) return 1;
  if (j1 == j2 && j2 == j3 && (j4 == j3 || j4 == j3 + 1) && j1 >= 1 && j1 <= s - 1) return pow2(2 * j1 - 1);
  // j1 = j-2, j2 = j3 = j-1, j4 = j
  if (j4 >= 2 && j4 <= s && j1 + 2 == j4 && j2 + 1 == j4 && j3 + 1 == j4) return pow2(2 * j4 - 3);
  if (j1 == s - 1 && j2 == s - 1 && j3 == s && j4 == s) return pow2(k + s - 1) - pow2(2 * s - 1);
  return 0;
}

BigInt stacked1_rank_recurrence(std::size_t m, std::size_t k, std::size_t i) {
  if (k == 0) throw std::invalid_argument("stacked1_rank_recurrence: k must be positive");
  BigInt v = pow2(i) * persym_rank_count(1 + m, k, i);
  if (i >= 1) v += diff_pow2(k, i - 1) * persym_rank_count(1 + m, k, i - 1);
  return v;
}

std::vector<PrintedCase> stacked1_printed_cases(std::size_t m, std::size_t k, std::size_t i) {
  if (k == 0 || i > std::min(k, 2 + m))
    throw std::invalid_argument("stacked1_printed_cases: need 0 <= i <= min(k, 2+m)");
  std::vector<PrintedCase> out;

  if (k == 2) {
    BigInt v = i == 0 ? BigInt(1) : i == 1 ? BigInt(9) : pow2(4 + m) - 10;
    out.push_back({"k=2", v});
  }
  if (m == 0 && k >= 2) {
    BigInt v = i == 0 ? BigInt(1) : i == 1 ? 3 * (pow2(k) - 1) : pow2(2 * k) - 3 * pow2(k) + 2;
    out.push_back({"m=0,k>=2", v});
  }
  if (m == 1 && k >= 3) {
    BigInt v;
    switch (i) {
      case 0: v = 1; break;
      case 1: v = pow2(k) + 5; break;
      case 2: v = 11 * (pow2(k) - 1); break;
      default: v = pow2(2 * k + 1) - 3 * pow2(k + 2) + pow2(4); break;
    }
    out.push_back({"m=1,k>=3", v});
  }
  if (k >= 3 && k <= 1 + m) {
    BigInt v;
    if (i == 0) v = 1;
    else if (i == 1) v = pow2(k) + 5;
    else if (i <= k - 1) v = 3 * pow2(k + 2 * i - 4) + 21 * pow2(3 * i - 5);
    else v = pow2(2 * k + m) - 5 * pow2(3 * k - 5);
    out.push_back({"3<=k<=1+m", v});
  }
  if (m >= 2 && m + 2 <= k) {
    BigInt v;
    if (i == 0) v = 1;
    else if (i == 1) v = pow2(k) + 5;
    else if (i <= m) v = 3 * pow2(k + 2 * i - 4) + 21 * pow2(3 * i - 5);
    else if (i == m + 1) v = 11 * (pow2(k + 2 * m - 2) - pow2(3 * m - 2));
    else v = pow2(2 * k + m) - 3 * pow2(k + 2 * m) + pow2(3 * m + 1);
    out.push_back({"2<=m<=k-2", v});
  }
  return out;
}

BigInt stacked1_rank_count(std::size_t m, std::size_t k, std::size_t i) {
  BigInt v = stacked1_rank_recurrence(m, k, i);
  for (const auto& c : stacked1_printed_cases(m, k, i))
    if (c.value != v)
      throw CaseMismatch("stacked one-row count at m=" + std::to_string(m) + " k=" + std::to_string(k) +
                         " i=" + std::to_string(i) + ": table " + c.branch + " gives " + to_string(c.value) +
                         ", recurrence gives " + to_string(v));
  return v;
}

BigInt a_coeff_recurrence(std::size_t n, std::size_t j) {
  if (j > n) throw std::invalid_argument("a_coeff_recurrence: need j <= n");
  std::vector<BigInt> row{1};
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1);
    next[0] = 1;
    next[r] = 1;
    for (std::size_t c = 1; c < r; ++c) next[c] = pow2(c) * row[c] + row[c - 1];
    row = std::move(next);
  }
  return row[j];
}

BigInt gaussian_binomial_2(std::size_t n_plus_1, std::size_t i) {
  BigInt num = 1, den = 1;
  for (std::size_t l = 0; l < i; ++l) {
    num *= diff_pow2(n_plus_1, l);
    den *= diff_pow2(i, l);
  }
  return exact_div(num, den, "gaussian_binomial_2");
}

BigInt a_coeff_closed(std::size_t n, std::size_t j) {
  if (j > n) throw std::invalid_argument("a_coeff_closed: need j <= n");
  if (j == 0 || j == n) return 1;
  BigInt sum = 0;
  for (std::size_t s = 0; s < j; ++s) {
    BigInt term = gaussian_binomial_2(n + 1, j - s) * pow2(s * (n - j) + s * (s + 1) / 2);
    sum += s % 2 ? -term : term;
  }
  BigInt last = pow2(j * n - j * (j - 1) / 2);
  sum += j % 2 ? -last : last;
  return sum;
}

BigInt stacked_rank_count(std::size_t n, std::size_t m, std::size_t k, std::size_t i) {
  if (k == 0) throw std::invalid_argument("stacked_rank_count: k must be positive");
  if (i > std::min(k, n + m + 1)) return 0;
  BigInt total = 0;
  for (std::size_t j = 0; j <= std::min(n, i); ++j) {
    BigInt gamma = persym_rank_count(1 + m, k, i - j);
    if (gamma == 0) continue;
    BigInt term = pow2((n - j) * (i - j)) * a_coeff_closed(n, j) * gamma;
    for (std::size_t l = 1; l <= j; ++l) term *= diff_pow2(k, i - l);
    total += term;
  }
  return total;
}

BigInt landsberg_count(std::size_t rows, std::size_t k, std::size_t i) {
  if (i > std::min(rows, k)) return 0;
  BigInt num = 1, den = 1;
  for (std::size_t l = 0; l < i; ++l) {
    num *= diff_pow2(rows, l) * diff_pow2(k, l);
    den *= diff_pow2(i, l);
  }
  return exact_div(num, den, "landsberg_count");
}

BigInt repcount_closed_form(unsigned q, std::size_t k, std::size_t m) {
  if (q == 0 || k == 0 || m + 1 > k) throw std::invalid_argument("repcount_closed_form: need q >= 1 and m <= k-1");
  if (q == 1) return pow2(k) + pow2(1 + m) - 1;
  if (q == 2) return pow2(2 * k) + 3 * BigInt(m + 1) * pow2(k + m);

  // 3 (1 - 2^{(2-q)m}) / (2^q - 4) = 3 (1 + x + ... + x^{m-1}) / (4 x^m), x = 2^{q-2}
  const auto x = static_cast<std::int64_t>(q - 2);
  DyadicRational geometric = 0;
  for (std::size_t e = 0; e < m; ++e) geometric += DyadicRational::pow2(x * static_cast<std::int64_t>(e));
  const auto mm = static_cast<std::int64_t>(m);
  const auto kk = static_cast<std::int64_t>(k);
  const auto qq = static_cast<std::int64_t>(q);
  DyadicRational middle = DyadicRational(3) * geometric * DyadicRational::pow2(-2 - x * mm);
  DyadicRational tail =
      (DyadicRational::pow2(kk + mm) - DyadicRational::pow2(2 * mm)) * DyadicRational::pow2(-qq * (1 + mm));
  DyadicRational v = DyadicRational::pow2((qq - 1) * (kk + mm + 1) + 1) * (DyadicRational(1) + middle + tail);
  return v.to_integer();
}

std::vector<StackedTerm> stacked_coefficient_table(std::size_t n) {
  struct Printed {
    long long coefficient, slope, offset;
  };
  static const std::vector<std::vector<Printed>> printed = {
      {{1, 1, 0}, {1, 0, 0}},
      {{1, 2, 0}, {3, 1, -1}, {1, 0, 0}},
      {{1, 3, 0}, {7, 2, -2}, {7, 1, -2}, {1, 0, 0}},
      {{1, 4, 0}, {15, 3, -3}, {35, 2, -4}, {15, 1, -3}, {1, 0, 0}},
      {{1, 5, 0}, {31, 4, -4}, {155, 3, -6}, {155, 2, -6}, {31, 1, -4}, {1, 0, 0}},
  };
  if (n < 1 || n > printed.size()) throw std::invalid_argument("stacked_coefficient_table: n must be in 1..5");
  std::vector<StackedTerm> out;
  for (std::size_t j = 0; j <= n; ++j) {
    const auto& p = printed[n - 1][j];
    out.push_back({j, BigInt(p.coefficient), p.slope, p.offset, a_coeff_closed(n, j)});
  }
  return out;
}

DyadicRational stacked_term_multiplier(const StackedTerm& term, std::size_t i, std::size_t k) {
  const auto ii = static_cast<std::int64_t>(i);
  DyadicRational v = DyadicRational(term.coefficient) * DyadicRational::pow2(term.slope * ii + term.offset);
  for (std::size_t l = 1; l <= term.j; ++l)
    v *= DyadicRational::pow2(static_cast<std::int64_t>(k)) - DyadicRational::pow2(ii - static_cast<std::int64_t>(l));
  return v;
}

}  // namespace persym
