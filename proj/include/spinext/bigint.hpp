#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinext {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::size_t exponent) {
  BigInt x = 1;
  x <<= exponent;
  return x;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline bool fits_u64(const BigInt& x) {
  return x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

}  // namespace spinext
