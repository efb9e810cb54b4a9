#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "persym/bigint.hpp"

namespace persym {

// Exact value mantissa * 2^exponent. Kept in normal form: the mantissa is odd,
// or zero with exponent 0, so equal values compare equal member-wise.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt mantissa, std::int64_t exponent = 0);  // NOLINT: integers convert implicitly
  DyadicRational(long long v) : DyadicRational(BigInt(v)) {}   // NOLINT

  static DyadicRational pow2(std::int64_t e);

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool is_zero() const noexcept { return mantissa_ == 0; }
  bool is_integer() const noexcept { return exponent_ >= 0; }

  // Throws NonIntegerResult unless is_integer().
  BigInt to_integer() const;

  DyadicRational pow(unsigned e) const;

  // "m" for integers, "m/2^e" otherwise.
  std::string to_string() const;

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a);
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
  DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }
  DyadicRational& operator*=(const DyadicRational& o) { return *this = *this * o; }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

 private:
  void normalize();

  BigInt mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

}  // namespace persym
