#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "lcg/errors.hpp"

namespace lcg {

// Exact arithmetic throughout: strict threshold comparisons must never be
// decided by floating-point ties.
using Rational = boost::rational<long long>;

inline Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  return Rational(num, den);
}

// "num/den" or a bare integer.
Rational parse_rational(const std::string& text);

// Canonical "num/den" (normalized, positive denominator), e.g. "0/1", "3/4".
std::string format_rational(const Rational& value);

// Smallest integer c with 2^c >= value. value must be positive.
int ceil_log2(const Rational& value);

// Smallest integer c >= 0 with 2^c >= value, for integer inputs; value >= 1.
int ceil_log2_u64(std::uint64_t value);

// ceil(value) for a nonnegative rational.
std::uint64_t ceil_to_u64(const Rational& value);

}  // namespace lcg
