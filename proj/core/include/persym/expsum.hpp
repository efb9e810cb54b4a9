#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "persym/bigint.hpp"
#include "persym/laurent.hpp"

namespace persym {

// Quadratic exponential sums over the unit interval, each available as a
// literal character sum ("direct") and as a rank formula ("closed").
// Direct sums deliberately enumerate every term so they stay an independent
// check on the closed forms; their cost is 2^{#free coefficients}.
//
// Degree ranges: "deg Y <= d" includes Y = 0, "deg Y = d" needs a leading 1.

// sum_{deg Y <= k-1} sum_{deg Z <= s-1} E(tYZ). t.precision >= k+s-1.
BigInt h_direct(std::size_t s, std::size_t k, const UnitSeries& t);
// 2^{k+s-rank D_{s x k}(t)}.
BigInt h_closed(std::size_t s, std::size_t k, const UnitSeries& t);

// sum_{deg Y = k-1} sum_{deg Z = s-1} E(tYZ), s, k >= 2.
BigInt g_direct(std::size_t s, std::size_t k, const UnitSeries& t);
// +-2^{s+k-j-2} or 0 according to the rank profile of D_{s x k}(t).
BigInt g_closed(std::size_t s, std::size_t k, const UnitSeries& t);

// (g1, g2) with g1 = sum_{deg Y <= k-2, deg Z = s-1}, g2 = sum_{deg Y = k-1, deg Z <= s-2},
// both evaluated from rank formulas; g^2 = g1 * g2.
std::pair<BigInt, BigInt> g_boundary_factors(std::size_t s, std::size_t k, const UnitSeries& t);

// sum_Y sum_{deg Z <= m} E(tYZ) E(eta Y)  (the single U = 1).
BigInt g2var_direct(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta);
BigInt g2var_closed(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta);

// sum_Y sum_{deg Z <= m} E(tYZ) sum_{U in {0,1}} E(eta Y U).
BigInt f2var_direct(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta);
BigInt f2var_closed(std::size_t m, std::size_t k, const UnitSeries& t, const UnitSeries& eta);

// n-variable generalisation of f2var; n = 0 is h_{1+m,k}, n = 1 is f2var.
BigInt fmulti_direct(std::size_t m, std::size_t k, const UnitSeries& t, std::span<const UnitSeries> etas);
BigInt fmulti_closed(std::size_t m, std::size_t k, const UnitSeries& t, std::span<const UnitSeries> etas);

}  // namespace persym
