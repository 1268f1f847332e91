#include "lcg/rational.hpp"

#include <cstdlib>

namespace lcg {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text));
    }
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational: zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("rational: cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("rational: out of range '" + text + "'");
  }
}

std::string format_rational(const Rational& value) {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

int ceil_log2(const Rational& value) {
  if (value <= Rational(0)) throw DomainError("ceil_log2: nonpositive value");
  int c = 0;
  Rational pow(1);
  while (pow < value) {
    pow *= 2;
    ++c;
  }
  while (pow / 2 >= value) {
    pow /= 2;
    --c;
  }
  return c;
}

int ceil_log2_u64(std::uint64_t value) {
  if (value == 0) throw DomainError("ceil_log2_u64: zero");
  int c = 0;
  while (c < 64 && (std::uint64_t{1} << c) < value) ++c;
  return c;
}

std::uint64_t ceil_to_u64(const Rational& value) {
  if (value < Rational(0)) throw DomainError("ceil_to_u64: negative value");
  const long long num = value.numerator();
  const long long den = value.denominator();
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

}  // namespace lcg
