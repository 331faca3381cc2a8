// ecies.hpp
//
// Hybrid public-key encryption on the registered curves (ephemeral ECDH →
// key derivation → ChaCha20-Poly1305) used to protect SA payload bodies,
// plus the symmetric wrapper used for encrypted payload blocks. The hybrid
// encryption keys are single-use (fresh ephemeral per call), so they use a
// fixed all-zero nonce; the symmetric wrapper carries a random IV.
//
// Wire forms:
//   hybrid:    ephemeral point (uncompressed) ‖ 2-octet body length ‖ body ‖ tag
//   symmetric: iv (12 octets) ‖ 2-octet body length ‖ body ‖ tag

#pragma once

#include "ecike/aead.hpp"
#include "ecike/bigint.hpp"
#include "ecike/curve.hpp"
#include "ecike/rng.hpp"

namespace ecike {

struct EciesCiphertext {
    curve::Point ephemeral_public = curve::Point::infinity();
    Bytes body;
    Bytes tag;  // kAeadTagLen octets

    friend bool operator==(const EciesCiphertext&, const EciesCiphertext&) = default;
};

struct SymCiphertext {
    Bytes iv;   // kAeadNonceLen octets
    Bytes body;
    Bytes tag;

    friend bool operator==(const SymCiphertext&, const SymCiphertext&) = default;
};

EciesCiphertext ecies_encrypt(const curve::Point& recipient_public, BytesView plaintext,
                              Rng& rng, const curve::Params& params);

// Throws CryptoError on tag mismatch or an invalid ephemeral point.
Bytes ecies_decrypt(const BigUint& recipient_secret, const EciesCiphertext& ct,
                    const curve::Params& params);

Bytes encode_ecies(const EciesCiphertext& ct, const curve::Params& params);
EciesCiphertext decode_ecies(BytesView in, const curve::Params& params);  // throws ParseError

SymCiphertext sym_encrypt(BytesView key, BytesView plaintext, Rng& rng);
Bytes sym_decrypt(BytesView key, const SymCiphertext& ct);  // throws CryptoError

Bytes encode_sym(const SymCiphertext& ct);
SymCiphertext decode_sym(BytesView in);  // throws ParseError

}  // namespace ecike
