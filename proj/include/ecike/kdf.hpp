// kdf.hpp
//
// The keyed prf (HMAC-SHA256) and the phase-1 key-derivation chain:
// SKEYID for the three authentication methods, the SKEYID_d/a/e chain with
// single-octet 0/1/2 suffixes, and the HASH_I/HASH_R authentication digests
// in their default and extended-coverage ("improved") forms.
//
// Encoding rules fixed here so both sides agree:
//   - points inside prf inputs contribute their big-endian x-coordinate
//     alone, ceil(m/8) octets;
//   - "‖" is raw octet concatenation with no length framing, as in RFC 2409.

#pragma once

#include <array>

#include "ecike/curve.hpp"

namespace ecike::kdf {

inline constexpr std::size_t kPrfOutputLen = 32;

Bytes prf(BytesView key, BytesView msg);
Bytes hash(BytesView msg);  // the prf's underlying hash

// Fixed-length subkey: prf keyed with the secret over a context string.
Bytes derive_key(BytesView secret, std::string_view context);

// Big-endian x-coordinate, ceil(m/8) octets; throws DomainError on infinity.
Bytes point_secret_octets(const curve::Point& p, const curve::Params& params);

struct SkeyidSet {
    Bytes skeyid;
    Bytes skeyid_d;
    Bytes skeyid_a;
    Bytes skeyid_e;

    friend bool operator==(const SkeyidSet&, const SkeyidSet&) = default;
};

struct KeyMaterialInputs {
    const curve::Params* params = nullptr;
    Bytes ni_b, nr_b;        // nonce payload bodies
    Bytes cky_i, cky_r;      // 8-octet cookies
    curve::Point shared_point = curve::Point::infinity();  // Ki*Kr*G
    curve::Point ke_i = curve::Point::infinity();          // Ki*G
    curve::Point ke_r = curve::Point::infinity();          // Kr*G
    Bytes sa_i_b, sa_r_b;    // SA payload bodies as transmitted (plaintext form)
    Bytes id_i_b, id_r_b;    // identification payload bodies
};

// SKEYID = prf(Ni_b ‖ Nr_b, Ki*Kr*G)           [signature authentication]
Bytes skeyid_sig(const KeyMaterialInputs& in);
// SKEYID = prf(hash(Ni_b ‖ Nr_b), CKY-I ‖ CKY-R) [public-key encryption]
Bytes skeyid_pke(const KeyMaterialInputs& in);
// SKEYID = prf(pre-shared-key, Ni_b ‖ Nr_b)      [pre-shared keys]
Bytes skeyid_psk(BytesView pre_shared_key, const KeyMaterialInputs& in);

// The three prf inputs of the d/a/e chain, exposed so tests can audit the
// single-octet 0/1/2 suffix rule on the exact octets fed to the prf.
std::array<Bytes, 3> chain_inputs(BytesView skeyid, const KeyMaterialInputs& in);

// SKEYID_d = prf(SKEYID, shared ‖ CKY-I ‖ CKY-R ‖ 0)
// SKEYID_a = prf(SKEYID, SKEYID_d ‖ shared ‖ CKY-I ‖ CKY-R ‖ 1)
// SKEYID_e = prf(SKEYID, SKEYID_a ‖ shared ‖ CKY-I ‖ CKY-R ‖ 2)
SkeyidSet derive_chain(BytesView skeyid, const KeyMaterialInputs& in);

// Default coverage:
// HASH_I = prf(SKEYID, KEi ‖ KEr ‖ CKY-I ‖ CKY-R ‖ SAi_b ‖ IDii_b)
// HASH_R = prf(SKEYID, KEr ‖ KEi ‖ CKY-R ‖ CKY-I ‖ SAi_b ‖ IDir_b)
// (both cover the initiator's SA body, as in RFC 2409)
Bytes hash_i_baseline(BytesView skeyid, const KeyMaterialInputs& in);
Bytes hash_r_baseline(BytesView skeyid, const KeyMaterialInputs& in);

// Extended coverage over both SA bodies and both identities:
// HASH_I = prf(SKEYID, KEi ‖ KEr ‖ CKY-I ‖ CKY-R ‖ SAi ‖ SAr ‖ IDi ‖ IDr)
// HASH_R = prf(SKEYID, KEr ‖ KEi ‖ CKY-R ‖ CKY-I ‖ SAr ‖ SAi ‖ IDr ‖ IDi)
Bytes hash_i_improved(BytesView skeyid, const KeyMaterialInputs& in);
Bytes hash_r_improved(BytesView skeyid, const KeyMaterialInputs& in);

}  // namespace ecike::kdf
