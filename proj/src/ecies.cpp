#include "ecike/ecies.hpp"

#include "ecike/ecdh.hpp"
#include "ecike/kdf.hpp"

namespace ecike {

namespace {

constexpr std::string_view kEciesContext = "ecies-v1";
constexpr std::uint8_t kZeroNonce[kAeadNonceLen] = {};

Bytes ecies_key(const curve::Point& shared, const curve::Params& params) {
    return kdf::derive_key(kdf::point_secret_octets(shared, params), kEciesContext);
}

}  // namespace

EciesCiphertext ecies_encrypt(const curve::Point& recipient_public, BytesView plaintext,
                              Rng& rng, const curve::Params& params) {
    if (recipient_public.is_infinity() || !curve::is_on_curve(recipient_public, params))
        throw DomainError("recipient public point not on curve");

    const KeyPair ephemeral = keygen(rng, params);
    const curve::Point shared = curve::scalar_mul(ephemeral.secret, recipient_public, params);
    if (shared.is_infinity()) throw DomainError("degenerate shared point");

    const Bytes sealed =
        aead_seal(ecies_key(shared, params), {kZeroNonce, sizeof kZeroNonce}, plaintext, {});
    EciesCiphertext ct;
    ct.ephemeral_public = ephemeral.public_point;
    ct.body.assign(sealed.begin(), sealed.end() - kAeadTagLen);
    ct.tag.assign(sealed.end() - kAeadTagLen, sealed.end());
    return ct;
}

Bytes ecies_decrypt(const BigUint& recipient_secret, const EciesCiphertext& ct,
                    const curve::Params& params) {
    if (ct.ephemeral_public.is_infinity() || !curve::is_on_curve(ct.ephemeral_public, params))
        throw CryptoError("ephemeral point not on curve");
    if (recipient_secret.is_zero() || recipient_secret >= params.order)
        throw DomainError("recipient secret out of range");

    const curve::Point shared = curve::scalar_mul(recipient_secret, ct.ephemeral_public, params);
    if (shared.is_infinity()) throw CryptoError("degenerate shared point");

    const Bytes sealed = concat({ct.body, ct.tag});
    return aead_open(ecies_key(shared, params), {kZeroNonce, sizeof kZeroNonce}, sealed, {});
}

Bytes encode_ecies(const EciesCiphertext& ct, const curve::Params& params) {
    if (ct.body.size() > 0xFFFF) throw DomainError("body too long for 16-bit length");
    Bytes out = curve::encode_point(ct.ephemeral_public, params);
    append_u16(out, static_cast<std::uint16_t>(ct.body.size()));
    append(out, ct.body);
    append(out, ct.tag);
    return out;
}

EciesCiphertext decode_ecies(BytesView in, const curve::Params& params) {
    const std::size_t pb = params.point_bytes();
    if (in.size() < pb + 2 + kAeadTagLen) throw ParseError("hybrid ciphertext truncated");
    EciesCiphertext ct;
    ct.ephemeral_public = curve::decode_point(in.subspan(0, pb), params);
    const std::size_t body_len = read_u16(in, pb);
    if (in.size() != pb + 2 + body_len + kAeadTagLen) throw ParseError("hybrid ciphertext length mismatch");
    ct.body.assign(in.begin() + pb + 2, in.begin() + pb + 2 + body_len);
    ct.tag.assign(in.end() - kAeadTagLen, in.end());
    return ct;
}

SymCiphertext sym_encrypt(BytesView key, BytesView plaintext, Rng& rng) {
    SymCiphertext ct;
    ct.iv = rng.bytes(kAeadNonceLen);
    const Bytes sealed = aead_seal(key, ct.iv, plaintext, {});
    ct.body.assign(sealed.begin(), sealed.end() - kAeadTagLen);
    ct.tag.assign(sealed.end() - kAeadTagLen, sealed.end());
    return ct;
}

Bytes sym_decrypt(BytesView key, const SymCiphertext& ct) {
    if (ct.iv.size() != kAeadNonceLen) throw CryptoError("bad IV length");
    return aead_open(key, ct.iv, concat({ct.body, ct.tag}), {});
}

Bytes encode_sym(const SymCiphertext& ct) {
    if (ct.body.size() > 0xFFFF) throw DomainError("body too long for 16-bit length");
    Bytes out = ct.iv;
    append_u16(out, static_cast<std::uint16_t>(ct.body.size()));
    append(out, ct.body);
    append(out, ct.tag);
    return out;
}

SymCiphertext decode_sym(BytesView in) {
    if (in.size() < kAeadNonceLen + 2 + kAeadTagLen) throw ParseError("symmetric ciphertext truncated");
    SymCiphertext ct;
    ct.iv.assign(in.begin(), in.begin() + kAeadNonceLen);
    const std::size_t body_len = read_u16(in, kAeadNonceLen);
    if (in.size() != kAeadNonceLen + 2 + body_len + kAeadTagLen)
        throw ParseError("symmetric ciphertext length mismatch");
    ct.body.assign(in.begin() + kAeadNonceLen + 2, in.begin() + kAeadNonceLen + 2 + body_len);
    ct.tag.assign(in.end() - kAeadTagLen, in.end());
    return ct;
}

}  // namespace ecike
