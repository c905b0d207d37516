#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace semhuff {

// Little-endian scalar I/O for the file formats.
template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <typename T>
T get_le(const std::uint8_t* p) {
  T value = 0;
  for (std::size_t i = sizeof(T); i-- > 0;) {
    value = static_cast<T>((value << 8) | p[i]);
  }
  return value;
}

// ORs the `length` low bits of `code` (most significant of those bits
// first) into `buf` starting at absolute bit position `pos`. Bit i of a
// stream lives in byte i/8 at mask 0x80 >> (i%8). Callers own disjoint bit
// ranges over a zeroed buffer, so OR never clobbers neighbours.
inline void or_bits(std::uint8_t* buf, std::uint64_t pos, std::uint64_t code,
                    std::uint32_t length) {
  while (length > 0) {
    const std::uint32_t avail = 8u - static_cast<std::uint32_t>(pos & 7u);
    const std::uint32_t take = std::min(avail, length);
    const auto piece =
        static_cast<std::uint8_t>((code >> (length - take)) & ((1u << take) - 1u));
    buf[pos >> 3] |= static_cast<std::uint8_t>(piece << (avail - take));
    pos += take;
    length -= take;
  }
}

// MSB-first bit cursor over a byte buffer with a hard bit limit.
class BitReader {
 public:
  BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_limit)
      : bytes_(bytes), limit_(bit_limit) {}

  // Next bit as 0/1, or -1 once the limit is reached.
  int next() {
    if (pos_ >= limit_) return -1;
    const std::uint8_t byte = bytes_[pos_ >> 3];
    const int bit = (byte >> (7 - (pos_ & 7))) & 1;
    ++pos_;
    return bit;
  }

  std::uint64_t consumed() const { return pos_; }
  std::uint64_t remaining() const { return limit_ - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t pos_ = 0;
  std::uint64_t limit_ = 0;
};

}  // namespace semhuff
