#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace kmersenne {

/// Arbitrary-precision signed integer. All arithmetic in this library is
/// exact; nothing is ever rounded.
using Integer = boost::multiprecision::cpp_int;

/// 2^n as an exact integer.
inline Integer pow2(std::uint64_t n) { return Integer(1) << n; }

/// base^e by repeated squaring. 0^0 == 1 (empty product).
inline Integer ipow(Integer base, std::uint64_t e) {
  Integer acc(1);
  while (e != 0) {
    if (e & 1u) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

/// Index of the lowest set bit of |v|. Requires v != 0.
inline std::uint64_t trailing_zero_bits(const Integer& v) {
  const Integer a = boost::multiprecision::abs(v);
  return boost::multiprecision::lsb(a);
}

/// Number of bits in |v| (0 for v == 0).
inline std::uint64_t bit_length(const Integer& v) {
  if (v == 0) return 0;
  const Integer a = boost::multiprecision::abs(v);
  return boost::multiprecision::msb(a) + 1;
}

/// Exact v / 2^t; requires 2^t | v.
inline Integer shift_right_exact(const Integer& v, std::uint64_t t) {
  return v / pow2(t);
}

}  // namespace kmersenne
