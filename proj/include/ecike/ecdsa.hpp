// ecdsa.hpp
//
// ECDSA over the registered binary curves; digests are truncated to the
// order's bit length per X9.62. Signatures serialize as fixed-width
// big-endian r ‖ s, each ceil(bitlen(n)/8) octets.

#pragma once

#include "ecike/bigint.hpp"
#include "ecike/curve.hpp"
#include "ecike/ecdh.hpp"
#include "ecike/rng.hpp"

namespace ecike {

struct Signature {
    BigUint r;
    BigUint s;

    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature sign(const KeyPair& key, BytesView digest, Rng& rng);

// False on any invalid signature, including out-of-range r or s; never throws
// for malformed signature values.
bool verify(const curve::Point& public_point, BytesView digest, const Signature& sig,
            const curve::Params& params);

Bytes encode_signature(const Signature& sig, const curve::Params& params);
Signature decode_signature(BytesView in, const curve::Params& params);  // throws ParseError

}  // namespace ecike
