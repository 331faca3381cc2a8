// aead.hpp
//
// ChaCha20-Poly1305 (RFC 8439), the project-wide authenticated cipher.
// Simulator-grade: portable, not constant-time.

#pragma once

#include <array>
#include <cstdint>

#include "ecike/bytes.hpp"

namespace ecike {

inline constexpr std::size_t kAeadKeyLen = 32;
inline constexpr std::size_t kAeadNonceLen = 12;
inline constexpr std::size_t kAeadTagLen = 16;

// Returns ciphertext ‖ 16-octet tag.
Bytes aead_seal(BytesView key, BytesView nonce, BytesView plaintext, BytesView aad);

// Throws CryptoError on tag mismatch or malformed input.
Bytes aead_open(BytesView key, BytesView nonce, BytesView ciphertext_and_tag, BytesView aad);

// Raw ChaCha20 keystream block; exercised by tests and the deterministic RNG.
std::array<std::uint8_t, 64> chacha20_block(BytesView key, std::uint32_t counter, BytesView nonce);

}  // namespace ecike
