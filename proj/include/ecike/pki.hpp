// pki.hpp
//
// Single-level certificate authority binding identities to curve points.
// Certificates use the project's canonical octet form, not X.509:
//   2-octet subject length ‖ subject ‖ 1-octet group id ‖ point ‖
//   2-octet issuer length ‖ issuer ‖ CA signature (fixed width).
// The five production curves have pairwise distinct uncompressed point
// lengths, so a peer infers the DH group to use from the certificate's
// public-key length alone.

#pragma once

#include "ecike/curve.hpp"
#include "ecike/ecdsa.hpp"

namespace ecike::pki {

struct Certificate {
    Bytes subject;
    Bytes public_point;       // uncompressed encoding on the subject curve
    std::string curve_name;
    Bytes issuer;
    Signature ca_signature;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Canonical to-be-signed octets (everything except the signature).
Bytes cert_tbs_octets(const Certificate& cert);

class CertificateAuthority {
public:
    CertificateAuthority(KeyPair keypair, Bytes issuer_name);

    Certificate issue(BytesView subject, const curve::Point& public_point,
                      const curve::Params& subject_curve, Rng& rng) const;

    const curve::Point& public_key() const { return keypair_.public_point; }
    const curve::Params& params() const { return *keypair_.params; }

private:
    KeyPair keypair_;
    Bytes issuer_;
};

bool cert_verify(const curve::Point& ca_public, const curve::Params& ca_params,
                 const Certificate& cert);

// Maps the certificate's serialized point length to the unique curve and its
// DH group identifier. Throws LookupError on an unknown length.
int group_from_cert(const Certificate& cert);

Bytes encode_certificate(const Certificate& cert, const curve::Params& ca_params);
Certificate decode_certificate(BytesView in, const curve::Params& ca_params);  // throws ParseError

}  // namespace ecike::pki
