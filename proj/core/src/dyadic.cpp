#include "persym/dyadic.hpp"

#include <algorithm>

#include "persym/errors.hpp"

namespace persym {

namespace {

// Aligns both operands to the smaller exponent.
std::pair<BigInt, BigInt> aligned(const DyadicRational& a, const DyadicRational& b, std::int64_t& e) {
  e = std::min(a.exponent(), b.exponent());
  BigInt ma = a.mantissa() << static_cast<unsigned>(a.exponent() - e);
  BigInt mb = b.mantissa() << static_cast<unsigned>(b.exponent() - e);
  return {std::move(ma), std::move(mb)};
}

}  // namespace

DyadicRational::DyadicRational(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void DyadicRational::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto shift = boost::multiprecision::lsb(abs(mantissa_));
  if (shift > 0) {
    mantissa_ >>= shift;
    exponent_ += static_cast<std::int64_t>(shift);
  }
}

DyadicRational DyadicRational::pow2(std::int64_t e) { return DyadicRational(BigInt(1), e); }

BigInt DyadicRational::to_integer() const {
  if (!is_integer()) throw NonIntegerResult("value " + to_string() + " is not an integer");
  return mantissa_ << static_cast<unsigned>(exponent_);
}

DyadicRational DyadicRational::pow(unsigned e) const {
  DyadicRational r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string DyadicRational::to_string() const {
  if (is_integer()) return to_integer().str();
  return mantissa_.str() + "/2^" + std::to_string(-exponent_);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = 0;
  auto [ma, mb] = aligned(a, b, e);
  return DyadicRational(ma + mb, e);
}

DyadicRational operator-(const DyadicRational& a) { return DyadicRational(-a.mantissa_, a.exponent_); }

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) { return a + (-b); }

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return DyadicRational(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  std::int64_t e = 0;
  auto [ma, mb] = aligned(a, b, e);
  if (ma < mb) return std::strong_ordering::less;
  if (ma > mb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace persym
