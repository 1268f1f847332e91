#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcg/errors.hpp"

namespace lcg {

// Packed bit string. Bit 0 is the first (most significant) bit; within a
// byte, bit i lives at position 7 - (i % 8). All multi-bit integer views are
// big-endian: the first bit is the highest-order bit of the value.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : size_(nbits), bytes_((nbits + 7) / 8, 0) {}

  static Bits from_string(const std::string& zeros_and_ones);
  // `hex` holds ceil(nbits/4) digits; the value must fit in nbits.
  static Bits from_hex(const std::string& hex, std::size_t nbits);
  static Bits from_uint(std::uint64_t value, std::size_t nbits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const {
    if (i >= size_) throw RangeError("Bits::get: index out of range");
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
  }

  void set(std::size_t i, bool v) {
    if (i >= size_) throw RangeError("Bits::set: index out of range");
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    if (v)
      bytes_[i >> 3] |= mask;
    else
      bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
  }

  void push_back(bool v) {
    if (size_ % 8 == 0) bytes_.push_back(0);
    ++size_;
    set(size_ - 1, v);
  }

  // Appends `width` bits of `value`, most significant first.
  void append_uint(std::uint64_t value, std::size_t width);

  // Reads `width` bits starting at `pos` as a big-endian integer. width <= 64.
  std::uint64_t read_uint(std::size_t pos, std::size_t width) const;

  // Whole string as an integer; size() must be <= 64.
  std::uint64_t to_uint() const { return size_ == 0 ? 0 : read_uint(0, size_); }

  Bits reversed() const;
  Bits operator^(const Bits& other) const;  // sizes must match

  std::string to_string() const;
  std::string to_hex() const;

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  // Replaces the payload; trailing pad bits beyond size() must be zero.
  static Bits from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t nbits);

  bool operator==(const Bits& other) const {
    return size_ == other.size_ && bytes_ == other.bytes_;
  }
  bool operator!=(const Bits& other) const { return !(*this == other); }
  bool operator<(const Bits& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    return bytes_ < other.bytes_;
  }

private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace lcg
