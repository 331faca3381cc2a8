#include "ecike/ecdh.hpp"

namespace ecike {

KeyPair keygen(Rng& rng, const curve::Params& params) {
    const std::size_t bits = params.order.bit_length();
    const std::size_t width = (bits + 7) / 8;
    const unsigned excess = static_cast<unsigned>(width * 8 - bits);

    for (;;) {
        Bytes raw(width);
        rng.fill(raw);
        raw[0] &= static_cast<std::uint8_t>(0xFF >> excess);
        const BigUint secret = BigUint::from_bytes_be(raw);
        if (secret.is_zero() || secret >= params.order) continue;
        curve::Point pub = curve::scalar_mul(secret, params.base, params);
        if (pub.is_infinity()) continue;  // cannot happen for 0 < k < n
        return KeyPair{secret, std::move(pub), &params};
    }
}

bool validate_public_point(const curve::Point& p, const curve::Params& params) {
    if (p.is_infinity()) return false;
    if (!curve::is_on_curve(p, params)) return false;
    // Reject small-order points: on a curve of order h*n, a point of full
    // prime order n is exactly one annihilated by n.
    return curve::scalar_mul(params.order, p, params).is_infinity();
}

curve::Point ecdh_shared(const BigUint& secret, const curve::Point& peer_public,
                         const curve::Params& params) {
    if (secret.is_zero() || secret >= params.order) throw DomainError("secret scalar out of range");
    if (!validate_public_point(peer_public, params))
        throw DomainError("peer public point failed validation");
    return curve::scalar_mul(secret, peer_public, params);
}

}  // namespace ecike
