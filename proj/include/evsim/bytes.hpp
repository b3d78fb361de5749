#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evsim/errors.hpp"

namespace evsim {

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);  // throws UsageError

// 16-byte value with a phantom tag. Keys, nonces, blocks and MAC tags are
// all 128 bits wide on the wire but must not be mixed up at call sites;
// conversions go through as_block()/from_bytes() explicitly.
template <class Tag>
struct Byte16 {
  static constexpr std::size_t kSize = 16;

  std::array<std::uint8_t, kSize> bytes{};

  static Byte16 from_bytes(std::span<const std::uint8_t> src) {
    if (src.size() != kSize) {
      throw UsageError("expected 16 bytes, got " + std::to_string(src.size()));
    }
    Byte16 out;
    std::copy(src.begin(), src.end(), out.bytes.begin());
    return out;
  }

  static Byte16 from_hex(std::string_view hex) {
    return from_bytes(evsim::from_hex(hex));
  }

  // Repeats one byte; handy for test fixtures.
  static Byte16 filled(std::uint8_t value) {
    Byte16 out;
    out.bytes.fill(value);
    return out;
  }

  std::string hex() const { return to_hex(bytes); }

  bool is_zero() const {
    for (auto b : bytes) {
      if (b != 0) return false;
    }
    return true;
  }

  template <class OtherTag>
  Byte16<OtherTag> rewrap() const {
    Byte16<OtherTag> out;
    out.bytes = bytes;
    return out;
  }

  auto operator<=>(const Byte16&) const = default;
};

struct BlockTag {};
struct SecretKeyTag {};
struct NonceTag {};
struct MacTagTag {};

using Block = Byte16<BlockTag>;
using SecretKey = Byte16<SecretKeyTag>;
using Nonce = Byte16<NonceTag>;
using MacTag = Byte16<MacTagTag>;

inline Block as_block(const Nonce& n) { return n.rewrap<BlockTag>(); }

// Bytewise XOR of two 128-bit blocks.
Block xor_combine(const Block& a, const Block& b);

}  // namespace evsim
