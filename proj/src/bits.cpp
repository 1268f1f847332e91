#include "lcg/bits.hpp"

namespace lcg {
namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

const char* kHexDigits = "0123456789abcdef";

}  // namespace

Bits Bits::from_string(const std::string& zeros_and_ones) {
  Bits out;
  for (char c : zeros_and_ones) {
    if (c == '0')
      out.push_back(false);
    else if (c == '1')
      out.push_back(true);
    else
      throw ParseError("Bits::from_string: bad character");
  }
  return out;
}

Bits Bits::from_hex(const std::string& hex, std::size_t nbits) {
  const std::size_t want = (nbits + 3) / 4;
  if (hex.size() != want)
    throw ParseError("Bits::from_hex: expected " + std::to_string(want) +
                     " hex digits for " + std::to_string(nbits) + " bits");
  Bits out;
  for (char c : hex) {
    const int v = hex_digit(c);
    if (v < 0) throw ParseError("Bits::from_hex: bad hex digit");
    out.append_uint(static_cast<std::uint64_t>(v), 4);
  }
  // Drop the low padding bits of the last digit; they must be zero so the
  // hex form round-trips.
  const std::size_t pad = out.size_ - nbits;
  for (std::size_t i = 0; i < pad; ++i) {
    if (out.get(nbits + i)) throw ParseError("Bits::from_hex: nonzero padding");
  }
  out.size_ = nbits;
  out.bytes_.resize((nbits + 7) / 8);
  return out;
}

Bits Bits::from_uint(std::uint64_t value, std::size_t nbits) {
  if (nbits < 64 && (value >> nbits) != 0)
    throw RangeError("Bits::from_uint: value does not fit");
  Bits out;
  if (nbits > 64) {
    out = Bits(nbits - 64);  // leading zeros
    out.append_uint(value, 64);
    return out;
  }
  out.append_uint(value, nbits);
  return out;
}

void Bits::append_uint(std::uint64_t value, std::size_t width) {
  if (width > 64) throw RangeError("Bits::append_uint: width > 64");
  for (std::size_t i = 0; i < width; ++i)
    push_back((value >> (width - 1 - i)) & 1);
}

std::uint64_t Bits::read_uint(std::size_t pos, std::size_t width) const {
  if (width > 64) throw RangeError("Bits::read_uint: width > 64");
  if (pos + width > size_) throw RangeError("Bits::read_uint: out of range");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) {
    const std::size_t b = pos + i;
    v = (v << 1) | ((bytes_[b >> 3] >> (7 - (b & 7))) & 1);
  }
  return v;
}

Bits Bits::reversed() const {
  Bits out(size_);
  for (std::size_t i = 0; i < size_; ++i) out.set(i, get(size_ - 1 - i));
  return out;
}

Bits Bits::operator^(const Bits& other) const {
  if (size_ != other.size_) throw DomainError("Bits::xor: size mismatch");
  Bits out(size_);
  for (std::size_t i = 0; i < bytes_.size(); ++i)
    out.bytes_[i] = static_cast<std::uint8_t>(bytes_[i] ^ other.bytes_[i]);
  return out;
}

std::string Bits::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

std::string Bits::to_hex() const {
  std::string s;
  const std::size_t digits = (size_ + 3) / 4;
  s.reserve(digits);
  for (std::size_t d = 0; d < digits; ++d) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const std::size_t b = d * 4 + i;
      v = (v << 1) | (b < size_ && get(b) ? 1 : 0);
    }
    s.push_back(kHexDigits[v]);
  }
  return s;
}

Bits Bits::from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t nbits) {
  if (bytes.size() != (nbits + 7) / 8)
    throw ParseError("Bits::from_bytes: wrong payload length");
  Bits out;
  out.size_ = nbits;
  out.bytes_ = bytes;
  for (std::size_t i = nbits; i < bytes.size() * 8; ++i) {
    if ((bytes[i >> 3] >> (7 - (i & 7))) & 1)
      throw ParseError("Bits::from_bytes: nonzero padding");
  }
  return out;
}

}  // namespace lcg
