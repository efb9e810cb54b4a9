#include "persym/expsum.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "persym/errors.hpp"
#include "persym/hankel.hpp"

namespace persym {

namespace {

constexpr std::size_t kMaxDirectBits = 40;

void require(const UnitSeries& u, std::size_t needed, const char* what) {
  if (u.precision() < needed)
    throw InsufficientPrecision(std::string(what) + ": needs precision " + std::to_string(needed) +
                                ", series has " + std::to_string(u.precision()));
}

void require_positive(std::size_t v, std::size_t min, const char* what) {
  if (v < min) throw std::invalid_argument(std::string(what) + " out of range");
}

// All polynomials of degree <= d (d = bits - 1), Y = 0 included.
std::vector<Poly2> polys_up_to(std::size_t bits) {
  if (bits > kMaxDirectBits / 2) throw BudgetExceeded("direct sum degree range too large");
  std::vector<Poly2> out;
  out.reserve(std::size_t{1} << bits);
  for (Word w = 0; w < (Word{1} << bits); ++w) out.push_back(Poly2::from_word(w));
  return out;
}

// All polynomials of degree exactly bits - 1.
std::vector<Poly2> polys_exact(std::size_t bits) {
  std::vector<Poly2> out;
  for (auto& p : polys_up_to(bits))
    if (p.degree() == static_cast<long>(bits) - 1) out.push_back(std::move(p));
  return out;
}

std::int64_t sum_E_tYZ(const UnitSeries& t, const std::vector<Poly2>& ys, const std::vector<Poly2>& zs) {
  std::int64_t acc = 0;
  for (const auto& y : ys)
    for (const auto& z : zs) acc += value(char_E_of_product(t, poly_mul(y, z)));
  return acc;
}

}  // namespace

BigInt h_direct(std::size_t s, std::size_t k, const UnitSeries& t) {
  require_positive(s, 1, "h: s");
  require_positive(k, 1, "h: k");
  require(t, k + s - 1, "h_direct");
  return sum_E_tYZ(t, polys_up_to(k), polys_up_to(s));
}

BigInt h_closed(std::size_t s, std::size_t k, const UnitSeries& t) {
  require_positive(s, 1, "h: s");
  require_positive(k, 1, "h: k");
  require(t, k + s - 1, "h_closed");
  return pow2(k + s - rank(hankel(t, 1, s, k)));
}

BigInt g_direct(std::size_t s, std::size_t k, const UnitSeries& t) {
  require_positive(s, 2, "g: s");
  require_positive(k, 2, "g: k");
  require(t, k + s - 1, "g_direct");
  return sum_E_tYZ(t, polys_exact(k), polys_exact(s));
}

BigInt g_closed(std::size_t s, std::size_t k, const UnitSeries& t) {
  require_positive(s, 2, "g: s");
  require_positive(k, 2, "g: k");
  require(t, k + s - 1, "g_closed");
  const RankProfile p = rank_profile(t, 1, s, k);
  if (p.j1 != p.j2 || p.j1 != p.j3) return 0;
  const std::size_t j = p.j1;
  if (p.j4 == j) return pow2(s + k - j - 2);
  if (p.j4 == j + 1) return -pow2(s + k - j - 2);
  return 0;
}

std::pair<BigInt, BigInt> g_boundary_factors(std::size_t s, std::size_t k, const UnitSeries& t) {
  require_positive(s, 2, "g: s");
  require_positive(k, 2, "g: k");
  require(t, k + s - 1, "g_boundary_factors");
  const BigInt corner = h_closed(s - 1, k - 1, t);
  return {h_closed(s, k - 1, t) - corner, h_closed(s - 1, k, t) - corner};
}

BigInt g2var_direct(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta) {
  require_positive(k, 1, "g2var: k");
  require(t, k + m, "g2var_direct");
  require(eta, k, "g2var_direct");
  const Poly2 one = Poly2::from_word(1);
  const auto zs = polys_up_to(m + 1);
  std::int64_t acc = 0;
  for (const auto& y : polys_up_to(k)) {
    const int e_eta = value(char_E_of_product(eta, poly_mul(y, one)));
    for (const auto& z : zs) acc += value(char_E_of_product(t, poly_mul(y, z))) * e_eta;
  }
  return acc;
}

BigInt g2var_closed(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta) {
  require_positive(k, 1, "g2var: k");
  require(t, k + m, "g2var_closed");
  require(eta, k, "g2var_closed");
  const std::size_t top = rank(hankel(t, 1, 1 + m, k));
  const std::size_t full = rank(stacked(t, std::span(&eta, 1), m, k));
  return top == full ? pow2(k + m + 1 - top) : BigInt{0};
}

BigInt f2var_direct(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta) {
  return fmulti_direct(m, k, t, std::span(&eta, 1));
}

BigInt f2var_closed(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta) {
  return fmulti_closed(m, k, t, std::span(&eta, 1));
}

BigInt fmulti_direct(std::size_t m, std::size_t k, const UnitSeries& t, std::span<const UnitSeries> etas) {
  require_positive(k, 1, "fmulti: k");
  require(t, k + m, "fmulti_direct");
  for (const auto& eta : etas) require(eta, k, "fmulti_direct");
  const std::size_t n = etas.size();
  if (k + m + 1 + n > kMaxDirectBits) throw BudgetExceeded("fmulti_direct: term count too large");

  const auto zs = polys_up_to(m + 1);
  const auto us = polys_up_to(1);  // U in {0, 1}
  std::int64_t acc = 0;
  for (const auto& y : polys_up_to(k)) {
    for (const auto& z : zs) {
      const int e_t = value(char_E_of_product(t, poly_mul(y, z)));
      for (Word choice = 0; choice < (Word{1} << n); ++choice) {
        Sign prod = Sign::plus;
        for (std::size_t j = 0; j < n; ++j)
          prod = prod * char_E_of_product(etas[j], poly_mul(y, us[(choice >> j) & 1U]));
        acc += e_t * value(prod);
      }
    }
  }
  return acc;
}

BigInt fmulti_closed(std::size_t m, std::size_t k, const UnitSeries& t, std::span<const UnitSeries> etas) {
  require_positive(k, 1, "fmulti: k");
  require(t, k + m, "fmulti_closed");
  for (const auto& eta : etas) require(eta, k, "fmulti_closed");
  return pow2(k + m + etas.size() + 1 - rank(stacked(t, etas, m, k)));
}

}  // namespace persym
