#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace persym {

using Word = std::uint64_t;

// Polynomial over F2; bit i is the coefficient of T^i. Stored without
// trailing zero words so equality is structural.
class Poly2 {
 public:
  // Degree reported for the zero polynomial.
  static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

  Poly2() = default;

  static Poly2 from_word(Word bits);
  static Poly2 monomial(std::size_t degree);
  // Bit string, leftmost character is the constant term ("011" is T + T^2).
  static Poly2 from_literal(std::string_view bits);

  long degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool coeff(std::size_t i) const noexcept;
  std::span<const Word> words() const noexcept { return words_; }

  // Inverse of from_literal; the zero polynomial prints as "0".
  std::string to_literal() const;

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  explicit Poly2(std::vector<Word> words);
  void trim() noexcept;

  std::vector<Word> words_;
};

// Carry-less product.
Poly2 poly_mul(const Poly2& a, const Poly2& b);

// An element of the unit interval, sum_{i>=1} alpha_i T^{-i}, known exactly
// through alpha_N where N is the precision. Reading past N throws.
class UnitSeries {
 public:
  explicit UnitSeries(std::size_t precision = 0);

  // Bit b of `bits` is alpha_{1+b}; requires precision <= 64.
  static UnitSeries from_word(Word bits, std::size_t precision);
  // Bit string, leftmost character is alpha_1; precision is the length.
  static UnitSeries from_literal(std::string_view bits);
  static UnitSeries from_coefficients(std::initializer_list<int> alphas);

  std::size_t precision() const noexcept { return precision_; }

  // alpha_i for 1 <= i <= precision.
  bool coeff(std::size_t i) const;

  // Same element known to `precision` (must not exceed the current one).
  UnitSeries truncated(std::size_t precision) const;

  // Appends coefficients alpha_{N+1}.. taken from `tail` bits (bit b -> alpha_{N+1+b}).
  UnitSeries extended(std::size_t extra, Word tail) const;

  std::string to_literal() const;

  // Coefficientwise sum; the result is known to the smaller precision.
  friend UnitSeries operator+(const UnitSeries& a, const UnitSeries& b);
  friend bool operator==(const UnitSeries&, const UnitSeries&) = default;

 private:
  std::size_t precision_;
  std::vector<Word> bits_;  // bit (i - 1) holds alpha_i
};

// Additive character value.
enum class Sign : int { plus = 1, minus = -1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::plus : Sign::minus; }
constexpr Sign sign_of_parity(bool odd) noexcept { return odd ? Sign::minus : Sign::plus; }

// Fractional part {tP} to `out_precision` coefficients:
// beta_r = sum_j P_j alpha_{r+j}. Needs t.precision >= out_precision + deg P.
UnitSeries frac_mul(const UnitSeries& t, const Poly2& p, std::size_t out_precision);

// True iff nu({tP}) > s, i.e. beta_1 = ... = beta_s = 0.
bool frac_valuation_exceeds(const UnitSeries& t, const Poly2& p, std::size_t s);

// E(u) = (-1)^{alpha_1}.
Sign char_E(const UnitSeries& u);

// E(tP) = (-1)^{sum_j P_j alpha_{1+j}}; the polynomial part of tP never contributes.
Sign char_E_of_product(const UnitSeries& t, const Poly2& p);

// chi(u_1, ..., u_n) = prod E(u_i).
Sign char_chi(std::span<const UnitSeries> us);

}  // namespace persym
