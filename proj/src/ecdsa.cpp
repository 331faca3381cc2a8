#include "ecike/ecdsa.hpp"

namespace ecike {

namespace {

// Leftmost min(bitlen(n), 8*len) bits of the digest as an integer.
BigUint digest_to_scalar(BytesView digest, const BigUint& n) {
    BigUint z = BigUint::from_bytes_be(digest);
    const std::size_t digest_bits = digest.size() * 8;
    const std::size_t n_bits = n.bit_length();
    if (digest_bits > n_bits) z = z >> (digest_bits - n_bits);
    return z;
}

BigUint point_x_mod_n(const curve::Point& p, const curve::Params& params) {
    return BigUint::from_bytes_be(p.x().to_bytes()) % params.order;
}

}  // namespace

Signature sign(const KeyPair& key, BytesView digest, Rng& rng) {
    if (digest.empty()) throw DomainError("empty digest");
    const curve::Params& params = *key.params;
    const BigUint& n = params.order;
    const BigUint z = digest_to_scalar(digest, n) % n;

    for (;;) {
        const KeyPair nonce = keygen(rng, params);  // k and k*G
        const BigUint r = point_x_mod_n(nonce.public_point, params);
        if (r.is_zero()) continue;
        const BigUint k_inv = BigUint::mod_inv_prime(nonce.secret, n);
        const BigUint s = BigUint::mod_mul(k_inv, (z + BigUint::mod_mul(r, key.secret, n)) % n, n);
        if (s.is_zero()) continue;
        return Signature{r, s};
    }
}

bool verify(const curve::Point& public_point, BytesView digest, const Signature& sig,
            const curve::Params& params) {
    const BigUint& n = params.order;
    static const BigUint one = BigUint::from_u64(1);
    if (sig.r < one || sig.r >= n || sig.s < one || sig.s >= n) return false;
    if (!validate_public_point(public_point, params)) return false;
    if (digest.empty()) return false;

    const BigUint z = digest_to_scalar(digest, n) % n;
    const BigUint w = BigUint::mod_inv_prime(sig.s, n);
    const BigUint u1 = BigUint::mod_mul(z, w, n);
    const BigUint u2 = BigUint::mod_mul(sig.r, w, n);

    const curve::Point lhs = curve::scalar_mul(u1, params.base, params);
    const curve::Point rhs = curve::scalar_mul(u2, public_point, params);
    const curve::Point R = curve::add(lhs, rhs, params);
    if (R.is_infinity()) return false;
    return point_x_mod_n(R, params) == sig.r;
}

Bytes encode_signature(const Signature& sig, const curve::Params& params) {
    const std::size_t width = (params.order.bit_length() + 7) / 8;
    Bytes out = sig.r.to_bytes_be(width);
    append(out, sig.s.to_bytes_be(width));
    return out;
}

Signature decode_signature(BytesView in, const curve::Params& params) {
    const std::size_t width = (params.order.bit_length() + 7) / 8;
    if (in.size() != 2 * width) throw ParseError("bad signature length");
    return Signature{BigUint::from_bytes_be(in.subspan(0, width)),
                     BigUint::from_bytes_be(in.subspan(width))};
}

}  // namespace ecike
