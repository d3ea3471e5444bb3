#pragma once

#include <doctest.h>

#include <string>

#include "stieltjes/precision.hpp"

namespace test_support {

using stieltjes::BigFloat;

inline BigFloat bf(const char* text, unsigned digits = 80) {
  stieltjes::ScopedPrecision guard(digits);
  return BigFloat(text);
}

inline BigFloat pow10(long e, unsigned digits = 80) {
  stieltjes::ScopedPrecision guard(digits);
  return pow(BigFloat(10), e);
}

// |a - b| < 10^-digits, with a readable failure message.
inline void check_close(const BigFloat& a, const BigFloat& b, long digits,
                        const char* label = "") {
  BigFloat diff = abs(a - b);
  INFO(label, " |a-b| = ", diff.str(3, std::ios_base::scientific), " a = ",
       a.str(25, std::ios_base::scientific), " b = ", b.str(25, std::ios_base::scientific));
  CHECK(diff < pow10(-digits));
}

}  // namespace test_support
