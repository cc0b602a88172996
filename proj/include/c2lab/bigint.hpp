#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace c2lab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Non-negative remainder, also for negative inputs.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace c2lab
