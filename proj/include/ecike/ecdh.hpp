// ecdh.hpp
//
// Key pairs on the registered curves and ECDH shared-secret computation
// with strict received-point validation (on curve, not infinity, full
// base-point order) as the invalid-curve / small-subgroup gate.

#pragma once

#include "ecike/bigint.hpp"
#include "ecike/curve.hpp"
#include "ecike/rng.hpp"

namespace ecike {

struct KeyPair {
    BigUint secret;              // in [1, n-1]
    curve::Point public_point;   // secret * G
    const curve::Params* params = nullptr;
};

// Uniform secret via rejection sampling; public point checked non-infinity.
KeyPair keygen(Rng& rng, const curve::Params& params);

// Accepts points that are on the curve, not infinity, and of full order
// (scalar_mul(n, p) == infinity); anything else throws DomainError and the
// caller's handshake must abort.
bool validate_public_point(const curve::Point& p, const curve::Params& params);

curve::Point ecdh_shared(const BigUint& secret, const curve::Point& peer_public,
                         const curve::Params& params);

}  // namespace ecike
