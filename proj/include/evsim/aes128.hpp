#pragma once

#include <array>
#include <cstdint>

#include "evsim/bytes.hpp"

namespace evsim {

// AES-128, single 16-byte block only. Every encrypted quantity in the
// protocol is exactly one block, so there is no mode or padding machinery.
class Aes128 {
 public:
  explicit Aes128(const SecretKey& key);

  Block encrypt(const Block& plaintext) const;
  Block decrypt(const Block& ciphertext) const;

 private:
  // 11 round keys of 16 bytes each.
  std::array<std::uint8_t, 176> round_keys_{};
};

Block encrypt_block(const Block& plaintext, const SecretKey& key);
Block decrypt_block(const Block& ciphertext, const SecretKey& key);

}  // namespace evsim
