#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "persym/errors.hpp"
#include "persym/hankel.hpp"
#include "support.hpp"

using namespace persym;

TEST_CASE("hankel reads anti-diagonals from alpha_l") {
  auto t = UnitSeries::from_literal("1011");
  CHECK(hankel(t, 1, 2, 3) == BitMatrix{{1, 0, 1}, {0, 1, 1}});
  CHECK(rank(hankel(UnitSeries(9), 1, 3, 4)) == 0);
  auto u = UnitSeries::from_literal("0101");
  const auto d = hankel(u, 2, 2, 2);
  CHECK(d == BitMatrix{{1, 0}, {0, 1}});
  CHECK(rank(d) == 2);
}

TEST_CASE("hankel preconditions") {
  auto t = UnitSeries::from_literal("101");
  CHECK_THROWS_AS(hankel(t, 1, 2, 3), InsufficientPrecision);
  CHECK_THROWS_AS(hankel(t, 0, 1, 1), std::invalid_argument);
  CHECK(hankel(t, 1, 0, 7).rows() == 0);
}

TEST_CASE("stacked matrix") {
  auto t = UnitSeries::from_literal("10110");
  std::vector<UnitSeries> none;
  CHECK(stacked(t, none, 2, 3) == hankel(t, 1, 3, 3));

  std::vector<UnitSeries> zero_eta{UnitSeries(2)};
  CHECK(stacked(UnitSeries(2), zero_eta, 0, 2) == BitMatrix(2, 2));

  std::vector<UnitSeries> eta{UnitSeries::from_literal("011")};
  const auto d = stacked(t, eta, 2, 3);
  CHECK(d == BitMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {0, 1, 1}});

  CHECK_THROWS_AS(stacked(UnitSeries::from_literal("1011"), eta, 2, 3), InsufficientPrecision);
  std::vector<UnitSeries> short_eta{UnitSeries::from_literal("01")};
  CHECK_THROWS_AS(stacked(t, short_eta, 2, 3), InsufficientPrecision);
}

TEST_CASE("rank profile examples") {
  CHECK(rank_profile(UnitSeries(3), 1, 2, 2) == RankProfile{0, 0, 0, 0});
  CHECK(rank_profile(UnitSeries::from_literal("100"), 1, 2, 2) == RankProfile{1, 1, 1, 1});
  // D = {(0,0),(0,1)}: only the full block sees the 1.
  CHECK(rank_profile(UnitSeries::from_literal("001"), 1, 2, 2) == RankProfile{0, 0, 0, 1});
  CHECK(rank_profile(UnitSeries::from_literal("1"), 1, 1, 1) == RankProfile{0, 0, 0, 1});
}

TEST_CASE("rank profile keys") {
  RankProfile p{1, 2, 2, 3};
  CHECK(p.to_key() == "1,2,2,3");
  CHECK(RankProfile::from_key("1,2,2,3") == p);
  CHECK(RankProfile::from_key("10,0,0,11").j4 == 11);
  CHECK_THROWS_AS(RankProfile::from_key("1,2,3"), ParseError);
  CHECK_THROWS_AS(RankProfile::from_key("1,2,3,4,"), ParseError);
  CHECK_THROWS_AS(RankProfile::from_key("a,2,3,4"), ParseError);
}

TEST_CASE("hankel output is persymmetric and profiles match sliced ranks") {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t l = test::uniform(1, 4), n = test::uniform(1, 9), m = test::uniform(1, 9);
    const auto t = test::random_series(l + n + m);
    const auto d = hankel(t, l, n, m);
    CHECK(is_persymmetric(d));
    CHECK(is_persymmetric(transpose(d)));
    const auto p = rank_profile(t, l, n, m);
    CHECK(p.j1 == rank(hankel(t, l, n - 1, m - 1)));
    CHECK(p.j2 == rank(hankel(t, l, n - 1, m)));
    CHECK(p.j3 == rank(hankel(t, l, n, m - 1)));
    CHECK(p.j4 == rank(d));
    CHECK(p.is_consistent());
  }
}

TEST_CASE("every profile over a full coset grid is consistent") {
  const std::size_t n = 3, m = 4, bits = n + m - 1;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x)
    CHECK(rank_profile(UnitSeries::from_word(x, bits), 1, n, m).is_consistent());
}

TEST_CASE("is_persymmetric rejects a non-Hankel matrix") {
  CHECK_FALSE(is_persymmetric(BitMatrix{{1, 0}, {1, 0}}));
  CHECK(is_persymmetric(BitMatrix{{1, 0}, {0, 1}}));
}
