#include "ecike/handshake.hpp"

#include <algorithm>
#include <tuple>

#include "ecike/ecies.hpp"

namespace ecike::handshake {

using codec::ExchangeMode;
using codec::Payload;
using codec::PayloadKind;

namespace {

constexpr std::string_view kEncContext = "enc";    // message 5/6 key from SKEYID_e
constexpr std::string_view kMsg4Context = "msg4";  // improved message 4 key from the shared point

bool all_zero(BytesView b) {
    return std::all_of(b.begin(), b.end(), [](std::uint8_t v) { return v == 0; });
}

const Payload* find_payload(const std::vector<Payload>& payloads, PayloadKind kind) {
    for (const Payload& p : payloads) {
        if (p.kind == kind) return &p;
    }
    return nullptr;
}

}  // namespace

std::string_view role_name(Role role) {
    return role == Role::Initiator ? "initiator" : "responder";
}

std::string_view abort_reason_name(AbortReason reason) {
    switch (reason) {
        case AbortReason::None: return "none";
        case AbortReason::ParseError: return "parse_error";
        case AbortReason::UnexpectedMessage: return "unexpected_message";
        case AbortReason::BadCookie: return "bad_cookie";
        case AbortReason::ProposalMismatch: return "proposal_mismatch";
        case AbortReason::InvalidKePoint: return "invalid_ke_point";
        case AbortReason::DecryptFailed: return "decrypt_failed";
        case AbortReason::CertificateInvalid: return "certificate_invalid";
        case AbortReason::IdentityMismatch: return "identity_mismatch";
        case AbortReason::SignatureFailed: return "signature_failed";
    }
    return "?";
}

Party::Party(Role role, PartyConfig config) : role_(role), cfg_(std::move(config)) {
    if (!cfg_.params) throw DomainError("missing session curve");
    if (!cfg_.ca_params) throw DomainError("missing CA curve");
    if (cfg_.identity.empty()) throw DomainError("missing identity");
    if (cfg_.peer_cert.subject.empty() || cfg_.peer_cert.public_point.empty())
        throw DomainError("peer certificate required before starting");
    if (cfg_.own_cert.subject != cfg_.identity)
        throw DomainError("own certificate subject does not match identity");
    // The peer's certificate key length selects the DH group; it must agree
    // with the proposal and with our own certificate.
    if (pki::group_from_cert(cfg_.peer_cert) != cfg_.sa_proposal.group_id)
        throw DomainError("peer certificate selects a different DH group than the proposal");
    if (pki::group_from_cert(cfg_.own_cert) != cfg_.sa_proposal.group_id)
        throw DomainError("own certificate is not on the proposal's DH group");
    if (cfg_.params->group_id != cfg_.sa_proposal.group_id)
        throw DomainError("session curve does not match the proposal's DH group");
    // Certificates are exchanged out of band before phase 1, so the peer's
    // identity is known from the start; the ID payload received later must
    // match it. The responder needs this to cover IDi in its message-4 hash.
    peer_id_ = cfg_.peer_cert.subject;
}

const kdf::SkeyidSet& Party::established_keys() const {
    if (!established_ || !keys_) throw StateError("no keys before establishment");
    return *keys_;
}

StepResult Party::abort(AbortReason reason) {
    if (!established_) {
        abort_reason_ = reason;
        expected_msg_ = -1;
    }
    return StepResult{EventKind::Aborted, std::nullopt, reason};
}

Bytes Party::emit(std::uint8_t flags, std::vector<Payload> payloads) {
    codec::MessageHeader header;
    header.cky_i = cky_i_;
    header.cky_r = cky_r_.empty() ? Bytes(8, 0) : cky_r_;
    header.mode = cfg_.mode;
    header.flags = flags;
    ++counters_.messages_sent;
    return codec::encode_message(header, payloads);
}

kdf::KeyMaterialInputs Party::material() const {
    kdf::KeyMaterialInputs in;
    in.params = cfg_.params;
    in.ni_b = ni_;
    in.nr_b = nr_;
    in.cky_i = cky_i_;
    in.cky_r = cky_r_.empty() ? Bytes(8, 0) : cky_r_;
    in.shared_point = shared_;
    if (ephemeral_) {
        if (role_ == Role::Initiator) {
            in.ke_i = ephemeral_->public_point;
            in.ke_r = peer_ke_;
        } else {
            in.ke_i = peer_ke_;
            in.ke_r = ephemeral_->public_point;
        }
    }
    in.sa_i_b = sa_i_b_;
    in.sa_r_b = sa_r_b_;
    if (role_ == Role::Initiator) {
        in.id_i_b = cfg_.identity;
        in.id_r_b = peer_id_;
    } else {
        in.id_i_b = peer_id_;
        in.id_r_b = cfg_.identity;
    }
    return in;
}

void Party::derive_session_keys() {
    const auto in = material();
    keys_ = kdf::derive_chain(kdf::skeyid_sig(in), in);
}

Bytes Party::own_auth_hash() const {
    const auto in = material();
    const Bytes& skeyid = keys_->skeyid;
    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        return role_ == Role::Initiator ? kdf::hash_i_improved(skeyid, in)
                                        : kdf::hash_r_improved(skeyid, in);
    }
    return role_ == Role::Initiator ? kdf::hash_i_baseline(skeyid, in)
                                    : kdf::hash_r_baseline(skeyid, in);
}

Bytes Party::peer_auth_hash() const {
    const auto in = material();
    const Bytes& skeyid = keys_->skeyid;
    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        return role_ == Role::Initiator ? kdf::hash_r_improved(skeyid, in)
                                        : kdf::hash_i_improved(skeyid, in);
    }
    return role_ == Role::Initiator ? kdf::hash_r_baseline(skeyid, in)
                                    : kdf::hash_i_baseline(skeyid, in);
}

std::vector<Payload> Party::build_auth_block(Rng& rng) {
    const Bytes digest = own_auth_hash();
    const Signature sig = sign(cfg_.long_term, digest, rng);
    ++counters_.signatures_made;
    return {
        Payload{PayloadKind::Id, cfg_.identity},
        Payload{PayloadKind::Cert, pki::encode_certificate(cfg_.own_cert, *cfg_.ca_params)},
        Payload{PayloadKind::Sig, encode_signature(sig, *cfg_.params)},
    };
}

AbortReason Party::check_auth_block(const std::vector<Payload>& payloads) {
    const Payload* id = find_payload(payloads, PayloadKind::Id);
    const Payload* cert_p = find_payload(payloads, PayloadKind::Cert);
    const Payload* sig_p = find_payload(payloads, PayloadKind::Sig);
    if (!id || !cert_p || !sig_p || id->body.empty()) return AbortReason::ParseError;

    pki::Certificate cert;
    Signature sig;
    try {
        cert = pki::decode_certificate(cert_p->body, *cfg_.ca_params);
        sig = decode_signature(sig_p->body, *cfg_.params);
    } catch (const ParseError&) {
        return AbortReason::ParseError;
    }

    if (!pki::cert_verify(cfg_.ca_public, *cfg_.ca_params, cert))
        return AbortReason::CertificateInvalid;
    if (cert.subject != id->body) return AbortReason::IdentityMismatch;
    // The configured peer certificate pins whom we expect to be talking to.
    if (id->body != cfg_.peer_cert.subject) return AbortReason::IdentityMismatch;
    if (cert.curve_name != cfg_.params->name) return AbortReason::CertificateInvalid;

    peer_id_ = id->body;

    curve::Point peer_point = curve::Point::infinity();
    try {
        peer_point = curve::decode_point(cert.public_point, *cfg_.params);
    } catch (const ParseError&) {
        return AbortReason::CertificateInvalid;
    }

    const Bytes digest = peer_auth_hash();
    ++counters_.signatures_verified;
    if (!verify(peer_point, digest, sig, *cfg_.params)) return AbortReason::SignatureFailed;
    return AbortReason::None;
}

std::optional<Bytes> Party::start(Rng& rng) {
    if (started_) throw StateError("handshake already started");
    started_ = true;

    if (role_ == Role::Responder) {
        expected_msg_ = 1;
        return std::nullopt;
    }

    cky_i_ = rng.bytes(8);
    const Bytes sa_body = codec::encode_sa(cfg_.sa_proposal);
    sa_i_b_ = sa_body;

    std::vector<Payload> payloads;
    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        // {SAi}p_r: SA body hybrid-encrypted to the responder's certificate key
        const curve::Point peer_point =
            curve::decode_point(cfg_.peer_cert.public_point, *cfg_.params);
        ++counters_.pkc_encryptions;
        const EciesCiphertext ct = ecies_encrypt(peer_point, sa_body, rng, *cfg_.params);
        payloads.push_back(Payload{PayloadKind::PkcBlob, encode_ecies(ct, *cfg_.params)});
    } else {
        payloads.push_back(Payload{PayloadKind::Sa, sa_body});
    }
    expected_msg_ = 2;
    return emit(0, std::move(payloads));
}

StepResult Party::step(BytesView incoming, Rng& rng) {
    if (!started_) throw StateError("step before start");
    ++counters_.messages_received;

    codec::MessageHeader header;
    std::vector<Payload> payloads;
    try {
        std::tie(header, payloads) = codec::decode_message(incoming);
    } catch (const ParseError&) {
        return abort(AbortReason::ParseError);
    }

    if (expected_msg_ < 1) return abort(AbortReason::UnexpectedMessage);
    if (header.mode != cfg_.mode) return abort(AbortReason::ParseError);

    // Cookie discipline: message 1 carries a zero responder cookie and fixes
    // CKY-I; message 2 fixes CKY-R; later messages must echo both.
    const int index = expected_msg_;
    if (index == 1) {
        if (!all_zero(header.cky_r) || all_zero(header.cky_i)) return abort(AbortReason::BadCookie);
        cky_i_ = header.cky_i;
    } else if (index == 2) {
        if (header.cky_i != cky_i_ || all_zero(header.cky_r)) return abort(AbortReason::BadCookie);
        cky_r_ = header.cky_r;
    } else {
        if (header.cky_i != cky_i_ || header.cky_r != cky_r_) return abort(AbortReason::BadCookie);
    }

    // HDR* discipline: message 5 is encrypted in both modes, message 6 in
    // baseline; everything else travels with a clear header.
    const bool expect_encrypted =
        (index == 5) || (index == 6 && cfg_.mode == ExchangeMode::BaselineMain);
    if (bool(header.flags & codec::kFlagEncrypted) != expect_encrypted)
        return abort(AbortReason::ParseError);

    return on_message(index, payloads, rng);
}

StepResult Party::on_message(int index, const std::vector<Payload>& payloads, Rng& rng) {
    switch (index) {
        case 1: return handle_msg1(payloads, rng);
        case 2: return handle_msg2(payloads, rng);
        case 3: return handle_msg3(payloads, rng);
        case 4: return handle_msg4(payloads, rng);
        case 5: return handle_msg5(payloads, rng);
        case 6: return handle_msg6(payloads);
        default: return abort(AbortReason::UnexpectedMessage);
    }
}

// Responder: SA proposal arrives (plaintext or hybrid-encrypted); answer in kind.
StepResult Party::handle_msg1(const std::vector<Payload>& payloads, Rng& rng) {
    if (role_ != Role::Responder) return abort(AbortReason::UnexpectedMessage);

    Bytes sa_body;
    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        const Payload* blob = find_payload(payloads, PayloadKind::PkcBlob);
        if (!blob || find_payload(payloads, PayloadKind::Sa))
            return abort(AbortReason::ParseError);
        ++counters_.pkc_decryptions;
        try {
            const EciesCiphertext ct = decode_ecies(blob->body, *cfg_.params);
            sa_body = ecies_decrypt(cfg_.long_term.secret, ct, *cfg_.params);
        } catch (const Error&) {
            return abort(AbortReason::DecryptFailed);
        }
    } else {
        const Payload* sa = find_payload(payloads, PayloadKind::Sa);
        if (!sa) return abort(AbortReason::ParseError);
        sa_body = sa->body;
    }

    codec::SaBody sa;
    try {
        sa = codec::decode_sa(sa_body);
    } catch (const ParseError&) {
        return abort(AbortReason::ParseError);
    }
    if (sa.group_id != cfg_.sa_proposal.group_id) return abort(AbortReason::ProposalMismatch);
    sa_i_b_ = sa_body;

    cky_r_ = rng.bytes(8);
    const Bytes reply_body = codec::encode_sa(cfg_.sa_proposal);
    sa_r_b_ = reply_body;

    std::vector<Payload> reply;
    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        const curve::Point peer_point =
            curve::decode_point(cfg_.peer_cert.public_point, *cfg_.params);
        ++counters_.pkc_encryptions;
        const EciesCiphertext ct = ecies_encrypt(peer_point, reply_body, rng, *cfg_.params);
        reply.push_back(Payload{PayloadKind::PkcBlob, encode_ecies(ct, *cfg_.params)});
    } else {
        reply.push_back(Payload{PayloadKind::Sa, reply_body});
    }
    expected_msg_ = 3;
    return StepResult{EventKind::Continue, emit(0, std::move(reply)), AbortReason::None};
}

// Initiator: responder's SA answer; send KE + nonce.
StepResult Party::handle_msg2(const std::vector<Payload>& payloads, Rng& rng) {
    if (role_ != Role::Initiator) return abort(AbortReason::UnexpectedMessage);

    Bytes sa_body;
    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        const Payload* blob = find_payload(payloads, PayloadKind::PkcBlob);
        if (!blob) return abort(AbortReason::ParseError);
        ++counters_.pkc_decryptions;
        try {
            const EciesCiphertext ct = decode_ecies(blob->body, *cfg_.params);
            sa_body = ecies_decrypt(cfg_.long_term.secret, ct, *cfg_.params);
        } catch (const Error&) {
            return abort(AbortReason::DecryptFailed);
        }
    } else {
        const Payload* sa = find_payload(payloads, PayloadKind::Sa);
        if (!sa) return abort(AbortReason::ParseError);
        sa_body = sa->body;
    }

    codec::SaBody sa;
    try {
        sa = codec::decode_sa(sa_body);
    } catch (const ParseError&) {
        return abort(AbortReason::ParseError);
    }
    if (sa.group_id != cfg_.sa_proposal.group_id) return abort(AbortReason::ProposalMismatch);
    sa_r_b_ = sa_body;

    ephemeral_ = keygen(rng, *cfg_.params);
    ++counters_.scalar_mults;
    ni_ = rng.bytes(16);

    std::vector<Payload> reply{
        Payload{PayloadKind::Ke, curve::encode_point(ephemeral_->public_point, *cfg_.params)},
        Payload{PayloadKind::Nonce, ni_},
    };
    expected_msg_ = 4;
    return StepResult{EventKind::Continue, emit(0, std::move(reply)), AbortReason::None};
}

// Responder: KEi + Ni arrive; derive keys and send KEr + Nr (improved mode
// additionally authenticates now, under the msg4 ECDH-derived key).
StepResult Party::handle_msg3(const std::vector<Payload>& payloads, Rng& rng) {
    if (role_ != Role::Responder) return abort(AbortReason::UnexpectedMessage);

    const Payload* ke = find_payload(payloads, PayloadKind::Ke);
    const Payload* nonce = find_payload(payloads, PayloadKind::Nonce);
    if (!ke || !nonce || nonce->body.empty()) return abort(AbortReason::ParseError);

    try {
        peer_ke_ = curve::decode_point(ke->body, *cfg_.params);
    } catch (const ParseError&) {
        return abort(AbortReason::InvalidKePoint);
    }
    ni_ = nonce->body;

    ephemeral_ = keygen(rng, *cfg_.params);
    ++counters_.scalar_mults;
    nr_ = rng.bytes(16);

    try {
        shared_ = ecdh_shared(ephemeral_->secret, peer_ke_, *cfg_.params);
        ++counters_.scalar_mults;
    } catch (const DomainError&) {
        return abort(AbortReason::InvalidKePoint);
    }
    derive_session_keys();

    std::vector<Payload> reply{
        Payload{PayloadKind::Ke, curve::encode_point(ephemeral_->public_point, *cfg_.params)},
        Payload{PayloadKind::Nonce, nr_},
    };
    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        const Bytes key =
            kdf::derive_key(kdf::point_secret_octets(shared_, *cfg_.params), kMsg4Context);
        const Bytes block = codec::encode_payloads(build_auth_block(rng));
        ++counters_.sym_ops;
        reply.push_back(Payload{PayloadKind::SymBlob, encode_sym(sym_encrypt(key, block, rng))});
    }
    expected_msg_ = 5;
    return StepResult{EventKind::Continue, emit(0, std::move(reply)), AbortReason::None};
}

// Initiator: KEr + Nr arrive; derive keys; in improved mode verify the
// responder's authentication block and finish with message 5; in baseline
// mode send the encrypted initiator authentication (message 5) and await 6.
StepResult Party::handle_msg4(const std::vector<Payload>& payloads, Rng& rng) {
    if (role_ != Role::Initiator) return abort(AbortReason::UnexpectedMessage);

    const Payload* ke = find_payload(payloads, PayloadKind::Ke);
    const Payload* nonce = find_payload(payloads, PayloadKind::Nonce);
    if (!ke || !nonce || nonce->body.empty()) return abort(AbortReason::ParseError);

    try {
        peer_ke_ = curve::decode_point(ke->body, *cfg_.params);
    } catch (const ParseError&) {
        return abort(AbortReason::InvalidKePoint);
    }
    nr_ = nonce->body;

    try {
        shared_ = ecdh_shared(ephemeral_->secret, peer_ke_, *cfg_.params);
        ++counters_.scalar_mults;
    } catch (const DomainError&) {
        return abort(AbortReason::InvalidKePoint);
    }
    derive_session_keys();

    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        const Payload* blob = find_payload(payloads, PayloadKind::SymBlob);
        if (!blob) return abort(AbortReason::ParseError);
        const Bytes key =
            kdf::derive_key(kdf::point_secret_octets(shared_, *cfg_.params), kMsg4Context);
        Bytes block;
        ++counters_.sym_ops;
        try {
            block = sym_decrypt(key, decode_sym(blob->body));
        } catch (const Error&) {
            return abort(AbortReason::DecryptFailed);
        }
        std::vector<Payload> inner;
        try {
            inner = codec::decode_payloads(block);
        } catch (const ParseError&) {
            return abort(AbortReason::ParseError);
        }
        if (const AbortReason why = check_auth_block(inner); why != AbortReason::None)
            return abort(why);
    }

    // Initiator authentication, encrypted under the SKEYID_e-derived key.
    const Bytes enc_key = kdf::derive_key(keys_->skeyid_e, kEncContext);
    const Bytes block = codec::encode_payloads(build_auth_block(rng));
    ++counters_.sym_ops;
    std::vector<Payload> reply{
        Payload{PayloadKind::SymBlob, encode_sym(sym_encrypt(enc_key, block, rng))}};

    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        established_ = true;
        expected_msg_ = -1;
        return StepResult{EventKind::Established, emit(codec::kFlagEncrypted, std::move(reply)),
                          AbortReason::None};
    }
    expected_msg_ = 6;
    return StepResult{EventKind::Continue, emit(codec::kFlagEncrypted, std::move(reply)),
                      AbortReason::None};
}

// Responder: initiator's encrypted authentication. Improved mode completes
// here; baseline answers with its own authentication (message 6).
StepResult Party::handle_msg5(const std::vector<Payload>& payloads, Rng& rng) {
    if (role_ != Role::Responder) return abort(AbortReason::UnexpectedMessage);

    const Payload* blob = find_payload(payloads, PayloadKind::SymBlob);
    if (!blob || payloads.size() != 1) return abort(AbortReason::ParseError);

    const Bytes enc_key = kdf::derive_key(keys_->skeyid_e, kEncContext);
    Bytes block;
    ++counters_.sym_ops;
    try {
        block = sym_decrypt(enc_key, decode_sym(blob->body));
    } catch (const Error&) {
        return abort(AbortReason::DecryptFailed);
    }
    std::vector<Payload> inner;
    try {
        inner = codec::decode_payloads(block);
    } catch (const ParseError&) {
        return abort(AbortReason::ParseError);
    }
    if (const AbortReason why = check_auth_block(inner); why != AbortReason::None)
        return abort(why);

    if (cfg_.mode == ExchangeMode::ImprovedMain) {
        established_ = true;
        expected_msg_ = -1;
        return StepResult{EventKind::Established, std::nullopt, AbortReason::None};
    }

    const Bytes reply_block = codec::encode_payloads(build_auth_block(rng));
    ++counters_.sym_ops;
    std::vector<Payload> reply{
        Payload{PayloadKind::SymBlob, encode_sym(sym_encrypt(enc_key, reply_block, rng))}};
    established_ = true;
    expected_msg_ = -1;
    return StepResult{EventKind::Established, emit(codec::kFlagEncrypted, std::move(reply)),
                      AbortReason::None};
}

// Initiator, baseline only: responder's encrypted authentication.
StepResult Party::handle_msg6(const std::vector<Payload>& payloads) {
    if (role_ != Role::Initiator || cfg_.mode != ExchangeMode::BaselineMain)
        return abort(AbortReason::UnexpectedMessage);

    const Payload* blob = find_payload(payloads, PayloadKind::SymBlob);
    if (!blob || payloads.size() != 1) return abort(AbortReason::ParseError);

    const Bytes enc_key = kdf::derive_key(keys_->skeyid_e, kEncContext);
    Bytes block;
    ++counters_.sym_ops;
    try {
        block = sym_decrypt(enc_key, decode_sym(blob->body));
    } catch (const Error&) {
        return abort(AbortReason::DecryptFailed);
    }
    std::vector<Payload> inner;
    try {
        inner = codec::decode_payloads(block);
    } catch (const ParseError&) {
        return abort(AbortReason::ParseError);
    }
    if (const AbortReason why = check_auth_block(inner); why != AbortReason::None)
        return abort(why);

    established_ = true;
    expected_msg_ = -1;
    return StepResult{EventKind::Established, std::nullopt, AbortReason::None};
}

std::string describe_message(BytesView octets) {
    try {
        const auto [header, payloads] = codec::decode_message(octets);
        std::string out = "HDR";
        if (header.flags & codec::kFlagEncrypted) out += "*";
        out += "(";
        out += codec::mode_name(header.mode);
        out += ")";
        for (const Payload& p : payloads) {
            out += " ";
            out += codec::payload_kind_name(p.kind);
            out += "(" + std::to_string(p.body.size()) + ")";
        }
        return out;
    } catch (const ParseError&) {
        return "undecodable(" + std::to_string(octets.size()) + " octets)";
    }
}

}  // namespace ecike::handshake
