#include <doctest.h>

#include <vector>

#include "persym/errors.hpp"
#include "persym/laurent.hpp"
#include "support.hpp"

using namespace persym;

TEST_CASE("poly_mul") {
  const auto one_plus_t = Poly2::from_literal("11");
  CHECK(poly_mul(one_plus_t, one_plus_t) == Poly2::from_literal("101"));
  CHECK(poly_mul(Poly2{}, Poly2::from_literal("0101")).is_zero());
  CHECK(poly_mul(Poly2::from_literal("101"), one_plus_t) == Poly2::from_literal("1111"));
}

TEST_CASE("poly degree and literals") {
  CHECK(Poly2{}.degree() == Poly2::kMinusInfinity);
  CHECK(Poly2::from_literal("0").degree() == Poly2::kMinusInfinity);
  CHECK(Poly2::from_literal("0110").degree() == 2);
  CHECK(Poly2::from_literal("0110").to_literal() == "011");
  CHECK(Poly2{}.to_literal() == "0");
  CHECK(Poly2::monomial(70).degree() == 70);
  CHECK_THROWS_AS(Poly2::from_literal("01x"), ParseError);
  CHECK_THROWS_AS(Poly2::from_literal(""), ParseError);
}

TEST_CASE("product degree is additive") {
  for (int trial = 0; trial < 300; ++trial) {
    auto a = test::random_poly(40), b = test::random_poly(40);
    auto c = a * b;
    if (a.is_zero() || b.is_zero()) CHECK(c.is_zero());
    else CHECK(c.degree() == a.degree() + b.degree());
    CHECK(c == b * a);
  }
}

TEST_CASE("unit series coefficients") {
  auto t = UnitSeries::from_literal("0110");
  CHECK(t.precision() == 4);
  CHECK_FALSE(t.coeff(1));
  CHECK(t.coeff(2));
  CHECK_THROWS_AS((void)t.coeff(5), InsufficientPrecision);
  CHECK(UnitSeries::from_word(0b0110, 4) == t);
  CHECK(UnitSeries::from_coefficients({0, 1, 1, 0}) == t);
  CHECK(t.to_literal() == "0110");
  CHECK(t.truncated(2).to_literal() == "01");
  CHECK(t.extended(3, 0b101).to_literal() == "0110101");
}

TEST_CASE("frac_mul") {
  auto t = UnitSeries::from_literal("1000");
  auto x = Poly2::from_literal("01");
  auto r = frac_mul(t, x, 3);
  CHECK(r.to_literal() == "000");

  auto u = UnitSeries::from_literal("0100");
  CHECK(frac_mul(u, x, 3).to_literal() == "100");
  CHECK(frac_mul(u, Poly2{}, 3).to_literal() == "000");
  CHECK_THROWS_AS(frac_mul(u, Poly2::from_literal("0001"), 3), InsufficientPrecision);
}

TEST_CASE("frac_valuation_exceeds") {
  CHECK(frac_valuation_exceeds(UnitSeries(6), Poly2::from_literal("1101"), 3));
  CHECK_FALSE(frac_valuation_exceeds(UnitSeries::from_literal("1000"), Poly2::from_literal("1"), 1));
  CHECK_FALSE(frac_valuation_exceeds(UnitSeries::from_literal("0010"), Poly2::from_literal("01"), 2));
}

TEST_CASE("character E") {
  CHECK(char_E(UnitSeries(3)) == Sign::plus);
  CHECK(char_E(UnitSeries::from_literal("100")) == Sign::minus);
  CHECK(char_E(UnitSeries::from_literal("010")) == Sign::plus);
  CHECK_THROWS_AS(char_E(UnitSeries(0)), InsufficientPrecision);

  CHECK(char_E_of_product(UnitSeries::from_literal("100"), Poly2{}) == Sign::plus);
  CHECK(char_E_of_product(UnitSeries::from_literal("100"), Poly2::from_literal("1")) == Sign::minus);
  CHECK(char_E_of_product(UnitSeries::from_literal("010"), Poly2::from_literal("01")) == Sign::minus);
}

TEST_CASE("character chi") {
  std::vector<UnitSeries> zeros(3, UnitSeries(2));
  CHECK(char_chi(zeros) == Sign::plus);
  std::vector<UnitSeries> two{UnitSeries::from_literal("1"), UnitSeries::from_literal("10")};
  CHECK(char_chi(two) == Sign::plus);
  std::vector<UnitSeries> a{UnitSeries::from_literal("1"), UnitSeries::from_literal("1"), UnitSeries::from_literal("0")};
  CHECK(char_chi(a) == Sign::plus);
  std::vector<UnitSeries> b{UnitSeries::from_literal("1"), UnitSeries::from_literal("0"), UnitSeries::from_literal("0")};
  CHECK(char_chi(b) == Sign::minus);
}

TEST_CASE("character is additive") {
  for (int trial = 0; trial < 300; ++trial) {
    auto u = test::random_series(test::uniform(1, 80));
    auto v = test::random_series(test::uniform(1, 80));
    CHECK(char_E(u + v) == char_E(u) * char_E(v));
  }
}

TEST_CASE("E(tYZ) is symmetric in Y and Z and ignores the polynomial part") {
  for (int trial = 0; trial < 300; ++trial) {
    auto y = test::random_poly(12), z = test::random_poly(12);
    auto t = test::random_series(30);
    CHECK(char_E_of_product(t, poly_mul(y, z)) == char_E_of_product(t, poly_mul(z, y)));
    // Multiplying by T^d shifts the window; the coefficient read is alpha_{1+d}.
    const std::size_t d = test::uniform(0, 20);
    CHECK(char_E_of_product(t, Poly2::monomial(d)) == sign_of_parity(t.coeff(1 + d)));
    // frac_mul keeps only negative powers: the T^{-1} coefficient of {tP} is what E reads.
    auto p = test::random_poly(10);
    CHECK(char_E(frac_mul(t, p, 1)) == char_E_of_product(t, p));
  }
}

TEST_CASE("character sums over a degree range vanish or are maximal") {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t j = test::uniform(0, 6);
    auto u = test::random_series(j + 2);
    if (trial % 3 == 0) u = UnitSeries(j + 1).extended(1, test::rng()());  // force large valuation
    long sum = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (j + 1)); ++b)
      sum += value(char_E_of_product(u, Poly2::from_word(b)));
    const long full = 1L << (j + 1);
    CHECK((sum == 0 || sum == full));
    CHECK((sum == full) == frac_valuation_exceeds(u, Poly2::from_literal("1"), j + 1));
  }
}
