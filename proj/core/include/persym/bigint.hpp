#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace persym {

using BigInt = boost::multiprecision::cpp_int;

// 2^e for e >= 0.
inline BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace persym
