#include "persym/laurent.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "persym/errors.hpp"

namespace persym {

namespace {

constexpr std::size_t kBits = 64;

bool test_bit(std::span<const Word> words, std::size_t i) noexcept {
  const std::size_t w = i / kBits;
  return w < words.size() && ((words[w] >> (i % kBits)) & 1U);
}

void set_bit(std::vector<Word>& words, std::size_t i) {
  const std::size_t w = i / kBits;
  if (w >= words.size()) words.resize(w + 1, 0);
  words[w] |= Word{1} << (i % kBits);
}

void flip_bit(std::vector<Word>& words, std::size_t i) {
  const std::size_t w = i / kBits;
  if (w >= words.size()) words.resize(w + 1, 0);
  words[w] ^= Word{1} << (i % kBits);
}

bool parse_bit(char c) {
  if (c == '0') return false;
  if (c == '1') return true;
  throw ParseError(std::string("bit literal contains '") + c + "'");
}

void require_precision(const UnitSeries& t, std::size_t needed, const char* what) {
  if (t.precision() < needed)
    throw InsufficientPrecision(std::string(what) + ": needs precision " + std::to_string(needed) +
                                ", series has " + std::to_string(t.precision()));
}

}  // namespace

// ---- Poly2 -----------------------------------------------------------------

Poly2::Poly2(std::vector<Word> words) : words_(std::move(words)) { trim(); }

void Poly2::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly2 Poly2::from_word(Word bits) { return Poly2(std::vector<Word>{bits}); }

Poly2 Poly2::monomial(std::size_t degree) {
  std::vector<Word> w;
  set_bit(w, degree);
  return Poly2(std::move(w));
}

Poly2 Poly2::from_literal(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty polynomial literal");
  std::vector<Word> w;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (parse_bit(bits[i])) set_bit(w, i);
  return Poly2(std::move(w));
}

long Poly2::degree() const noexcept {
  if (words_.empty()) return kMinusInfinity;
  const std::size_t top = words_.size() - 1;
  return static_cast<long>(top * kBits + (kBits - 1 - std::countl_zero(words_[top])));
}

bool Poly2::coeff(std::size_t i) const noexcept { return test_bit(words_, i); }

std::string Poly2::to_literal() const {
  if (is_zero()) return "0";
  std::string s;
  for (long i = 0; i <= degree(); ++i) s.push_back(coeff(static_cast<std::size_t>(i)) ? '1' : '0');
  return s;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  std::vector<Word> w(std::max(a.words_.size(), b.words_.size()), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) w[i] ^= a.words_[i];
  for (std::size_t i = 0; i < b.words_.size(); ++i) w[i] ^= b.words_[i];
  return Poly2(std::move(w));
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Word> w;
  const auto da = static_cast<std::size_t>(a.degree());
  const auto db = static_cast<std::size_t>(b.degree());
  w.assign((da + db) / kBits + 1, 0);
  for (std::size_t i = 0; i <= da; ++i) {
    if (!a.coeff(i)) continue;
    for (std::size_t j = 0; j <= db; ++j)
      if (b.coeff(j)) flip_bit(w, i + j);
  }
  return Poly2(std::move(w));
}

Poly2 poly_mul(const Poly2& a, const Poly2& b) { return a * b; }

// ---- UnitSeries ------------------------------------------------------------

UnitSeries::UnitSeries(std::size_t precision)
    : precision_(precision), bits_((precision + kBits - 1) / kBits, 0) {}

UnitSeries UnitSeries::from_word(Word bits, std::size_t precision) {
  if (precision > kBits) throw std::invalid_argument("UnitSeries::from_word: precision > 64");
  UnitSeries u(precision);
  if (precision > 0) u.bits_[0] = precision == kBits ? bits : bits & ((Word{1} << precision) - 1);
  return u;
}

UnitSeries UnitSeries::from_literal(std::string_view bits) {
  UnitSeries u(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (parse_bit(bits[i])) set_bit(u.bits_, i);
  return u;
}

UnitSeries UnitSeries::from_coefficients(std::initializer_list<int> alphas) {
  UnitSeries u(alphas.size());
  std::size_t i = 0;
  for (int a : alphas) {
    if (a != 0 && a != 1) throw std::invalid_argument("UnitSeries: coefficients must be 0 or 1");
    if (a) set_bit(u.bits_, i);
    ++i;
  }
  return u;
}

bool UnitSeries::coeff(std::size_t i) const {
  if (i == 0) throw std::out_of_range("UnitSeries::coeff: index starts at 1");
  if (i > precision_)
    throw InsufficientPrecision("coefficient alpha_" + std::to_string(i) + " requested from series of precision " +
                                std::to_string(precision_));
  return test_bit(bits_, i - 1);
}

UnitSeries UnitSeries::truncated(std::size_t precision) const {
  require_precision(*this, precision, "truncated");
  UnitSeries u(precision);
  for (std::size_t i = 0; i < precision; ++i)
    if (test_bit(bits_, i)) set_bit(u.bits_, i);
  return u;
}

UnitSeries UnitSeries::extended(std::size_t extra, Word tail) const {
  if (extra > kBits) throw std::invalid_argument("UnitSeries::extended: more than 64 tail bits");
  UnitSeries u(precision_ + extra);
  for (std::size_t i = 0; i < precision_; ++i)
    if (test_bit(bits_, i)) set_bit(u.bits_, i);
  for (std::size_t b = 0; b < extra; ++b)
    if ((tail >> b) & 1U) set_bit(u.bits_, precision_ + b);
  return u;
}

std::string UnitSeries::to_literal() const {
  std::string s;
  for (std::size_t i = 0; i < precision_; ++i) s.push_back(test_bit(bits_, i) ? '1' : '0');
  return s;
}

UnitSeries operator+(const UnitSeries& a, const UnitSeries& b) {
  UnitSeries u(std::min(a.precision_, b.precision_));
  for (std::size_t w = 0; w < u.bits_.size(); ++w) u.bits_[w] = a.bits_[w] ^ b.bits_[w];
  if (const std::size_t rem = u.precision_ % kBits; rem != 0 && !u.bits_.empty())
    u.bits_.back() &= (Word{1} << rem) - 1;
  return u;
}

// ---- fractional parts and characters ---------------------------------------

UnitSeries frac_mul(const UnitSeries& t, const Poly2& p, std::size_t out_precision) {
  UnitSeries out(out_precision);
  if (p.is_zero()) return out;
  const auto deg = static_cast<std::size_t>(p.degree());
  require_precision(t, out_precision + deg, "frac_mul");
  std::string bits(out_precision, '0');
  for (std::size_t r = 1; r <= out_precision; ++r) {
    bool beta = false;
    for (std::size_t j = 0; j <= deg; ++j)
      if (p.coeff(j) && t.coeff(r + j)) beta = !beta;
    if (beta) bits[r - 1] = '1';
  }
  return UnitSeries::from_literal(bits);
}

bool frac_valuation_exceeds(const UnitSeries& t, const Poly2& p, std::size_t s) {
  if (p.is_zero()) return true;
  const UnitSeries beta = frac_mul(t, p, s);
  for (std::size_t r = 1; r <= s; ++r)
    if (beta.coeff(r)) return false;
  return true;
}

Sign char_E(const UnitSeries& u) {
  require_precision(u, 1, "char_E");
  return sign_of_parity(u.coeff(1));
}

Sign char_E_of_product(const UnitSeries& t, const Poly2& p) {
  if (p.is_zero()) return Sign::plus;
  const auto deg = static_cast<std::size_t>(p.degree());
  require_precision(t, 1 + deg, "char_E_of_product");
  bool parity = false;
  for (std::size_t j = 0; j <= deg; ++j)
    if (p.coeff(j) && t.coeff(1 + j)) parity = !parity;
  return sign_of_parity(parity);
}

Sign char_chi(std::span<const UnitSeries> us) {
  Sign s = Sign::plus;
  for (const auto& u : us) s = s * char_E(u);
  return s;
}

}  // namespace persym
