#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cycpres {

// Arbitrary-precision integer used throughout.
using Integer = mpz_class;

inline Integer abs_value(const Integer& x) { return abs(x); }

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

// Floor-style modulus with result in [0, m) for m > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace cycpres
