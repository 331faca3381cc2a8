#include "ecike/pki.hpp"

#include "ecike/sha256.hpp"

namespace ecike::pki {

namespace {

std::uint8_t curve_id_octet(std::string_view curve_name) {
    return static_cast<std::uint8_t>(curve::params_for(curve_name).group_id);
}

std::string curve_name_from_octet(std::uint8_t id) {
    for (const std::string& name : curve::production_curve_names()) {
        if (curve::params_for(name).group_id == id) return name;
    }
    if (id == 0) return "TOY";
    throw ParseError("unknown curve id octet in certificate");
}

}  // namespace

Bytes cert_tbs_octets(const Certificate& cert) {
    Bytes out;
    append_u16(out, static_cast<std::uint16_t>(cert.subject.size()));
    append(out, cert.subject);
    out.push_back(curve_id_octet(cert.curve_name));
    append(out, cert.public_point);
    append_u16(out, static_cast<std::uint16_t>(cert.issuer.size()));
    append(out, cert.issuer);
    return out;
}

CertificateAuthority::CertificateAuthority(KeyPair keypair, Bytes issuer_name)
    : keypair_(std::move(keypair)), issuer_(std::move(issuer_name)) {
    if (issuer_.empty()) throw DomainError("issuer name must be non-empty");
}

Certificate CertificateAuthority::issue(BytesView subject, const curve::Point& public_point,
                                        const curve::Params& subject_curve, Rng& rng) const {
    if (subject.empty()) throw DomainError("subject must be non-empty");
    if (!validate_public_point(public_point, subject_curve))
        throw DomainError("refusing to certify an invalid public point");

    Certificate cert;
    cert.subject.assign(subject.begin(), subject.end());
    cert.public_point = curve::encode_point(public_point, subject_curve);
    cert.curve_name = subject_curve.name;
    cert.issuer = issuer_;
    cert.ca_signature = sign(keypair_, Sha256::digest(cert_tbs_octets(cert)), rng);
    return cert;
}

bool cert_verify(const curve::Point& ca_public, const curve::Params& ca_params,
                 const Certificate& cert) {
    try {
        return verify(ca_public, Sha256::digest(cert_tbs_octets(cert)), cert.ca_signature,
                      ca_params);
    } catch (const Error&) {
        return false;
    }
}

int group_from_cert(const Certificate& cert) {
    const std::size_t len = cert.public_point.size();
    for (const std::string& name : curve::production_curve_names()) {
        const curve::Params& params = curve::params_for(name);
        if (params.point_bytes() == len) return params.group_id;
    }
    throw LookupError("certificate public-key length matches no registered curve");
}

Bytes encode_certificate(const Certificate& cert, const curve::Params& ca_params) {
    Bytes out = cert_tbs_octets(cert);
    append(out, encode_signature(cert.ca_signature, ca_params));
    return out;
}

Certificate decode_certificate(BytesView in, const curve::Params& ca_params) {
    Certificate cert;
    std::size_t off = 0;
    const std::size_t subject_len = read_u16(in, off);
    off += 2;
    if (off + subject_len > in.size()) throw ParseError("certificate subject truncated");
    cert.subject.assign(in.begin() + off, in.begin() + off + subject_len);
    off += subject_len;

    if (off >= in.size()) throw ParseError("certificate curve id missing");
    cert.curve_name = curve_name_from_octet(in[off]);
    off += 1;

    const std::size_t point_len = curve::params_for(cert.curve_name).point_bytes();
    if (off + point_len > in.size()) throw ParseError("certificate point truncated");
    cert.public_point.assign(in.begin() + off, in.begin() + off + point_len);
    off += point_len;

    const std::size_t issuer_len = read_u16(in, off);
    off += 2;
    if (off + issuer_len > in.size()) throw ParseError("certificate issuer truncated");
    cert.issuer.assign(in.begin() + off, in.begin() + off + issuer_len);
    off += issuer_len;

    const std::size_t sig_len = 2 * ((ca_params.order.bit_length() + 7) / 8);
    if (in.size() - off != sig_len) throw ParseError("certificate signature length mismatch");
    cert.ca_signature = decode_signature(in.subspan(off), ca_params);
    return cert;
}

}  // namespace ecike::pki
