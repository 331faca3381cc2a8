// handshake.hpp
//
// Initiator and responder state machines for phase-1 key establishment with
// ECDH key exchange and ECDSA authentication, in two exchange modes:
//
// baseline (6 messages, the classic main mode):
//   1  I -> R  HDR, SAi
//   2  R -> I  HDR, SAr
//   3  I -> R  HDR, KEi, Ni
//   4  R -> I  HDR, KEr, Nr
//   5  I -> R  HDR*, { IDi, CERTi, SIG_I }          encrypted, SKEYID_e key
//   6  R -> I  HDR*, { IDr, CERTr, SIG_R }          encrypted, same key
//
// improved (5 messages, SA confidentiality + initiator identity protection):
//   1  I -> R  HDR, {SAi}p_r                        hybrid-encrypted to responder
//   2  R -> I  HDR, {SAr}p_i                        hybrid-encrypted to initiator
//   3  I -> R  HDR, KEi, Ni
//   4  R -> I  HDR, KEr, Nr, [IDr, CERTr, SIG_R]    encrypted, msg4 ECDH-derived key
//   5  I -> R  HDR*, [IDi, CERTi, SIG_I]            encrypted, SKEYID_e-derived key
//
// HASH_I/HASH_R follow the per-mode formulas in kdf.hpp; signatures are made
// over the HASH octets and verified against the peer certificate's public
// point. Any validation failure aborts with a distinct reason code.
//
// Key schedule contexts (deliberately distinct):
//   message-5/6 encryption key:  derive_key(SKEYID_e, "enc")
//   improved message-4 key:      derive_key(x(Ki*Kr*G), "msg4")
// Message 4 must be decryptable before the SKEYID chain inputs are complete,
// and the two directions of the improved exchange use different keys.

#pragma once

#include <optional>
#include <string>

#include "ecike/codec.hpp"
#include "ecike/ecdh.hpp"
#include "ecike/ecdsa.hpp"
#include "ecike/kdf.hpp"
#include "ecike/pki.hpp"
#include "ecike/rng.hpp"

namespace ecike::handshake {

enum class Role : std::uint8_t { Initiator, Responder };

std::string_view role_name(Role role);

enum class AbortReason : std::uint8_t {
    None = 0,
    ParseError,         // malformed octets or header fields
    UnexpectedMessage,  // out-of-order or post-completion traffic
    BadCookie,          // cookie mismatch with session state
    ProposalMismatch,   // SA group disagreement
    InvalidKePoint,     // KE point off-curve / wrong order
    DecryptFailed,      // hybrid or symmetric authenticated decryption failed
    CertificateInvalid, // CA signature or certificate structure failed
    IdentityMismatch,   // ID payload does not match the certificate subject / expected peer
    SignatureFailed,    // HASH signature verification failed
};

std::string_view abort_reason_name(AbortReason reason);

enum class EventKind : std::uint8_t { Continue, Established, Aborted };

struct StepResult {
    EventKind event = EventKind::Continue;
    std::optional<Bytes> outgoing;
    AbortReason reason = AbortReason::None;
};

// Per-party operation counters. scalar_mults counts key-agreement scalar
// multiplications only (ephemeral keygen + shared-secret); multiplications
// inside signing, verification, hybrid encryption, and point validation are
// attributed to their own counters instead.
struct Instrumentation {
    std::uint32_t scalar_mults = 0;
    std::uint32_t signatures_made = 0;
    std::uint32_t signatures_verified = 0;
    std::uint32_t pkc_encryptions = 0;
    std::uint32_t pkc_decryptions = 0;  // attempts, successful or not
    std::uint32_t sym_ops = 0;
    std::uint32_t messages_sent = 0;
    std::uint32_t messages_received = 0;
};

struct PartyConfig {
    codec::ExchangeMode mode = codec::ExchangeMode::ImprovedMain;
    const curve::Params* params = nullptr;   // session curve
    KeyPair long_term;                       // certificate keypair
    pki::Certificate own_cert;
    curve::Point ca_public = curve::Point::infinity();
    const curve::Params* ca_params = nullptr;
    pki::Certificate peer_cert;              // required before starting
    Bytes identity;
    codec::SaBody sa_proposal;
};

class Party {
public:
    // Validates the configuration: the peer certificate must be present and
    // its key length must select the same DH group as sa_proposal.
    Party(Role role, PartyConfig config);

    // Initiator emits message 1; responder emits nothing.
    std::optional<Bytes> start(Rng& rng);

    StepResult step(BytesView incoming, Rng& rng);

    Role role() const { return role_; }
    bool established() const { return established_; }
    AbortReason abort_reason() const { return abort_reason_; }
    const Instrumentation& counters() const { return counters_; }

    // Throws StateError before establishment.
    const kdf::SkeyidSet& established_keys() const;

private:
    StepResult abort(AbortReason reason);
    Bytes emit(std::uint8_t flags, std::vector<codec::Payload> payloads);
    kdf::KeyMaterialInputs material() const;
    void derive_session_keys();
    Bytes own_auth_hash() const;
    Bytes peer_auth_hash() const;
    std::vector<codec::Payload> build_auth_block(Rng& rng);
    AbortReason check_auth_block(const std::vector<codec::Payload>& payloads);

    StepResult on_message(int index, const std::vector<codec::Payload>& payloads, Rng& rng);
    StepResult handle_msg1(const std::vector<codec::Payload>& payloads, Rng& rng);
    StepResult handle_msg2(const std::vector<codec::Payload>& payloads, Rng& rng);
    StepResult handle_msg3(const std::vector<codec::Payload>& payloads, Rng& rng);
    StepResult handle_msg4(const std::vector<codec::Payload>& payloads, Rng& rng);
    StepResult handle_msg5(const std::vector<codec::Payload>& payloads, Rng& rng);
    StepResult handle_msg6(const std::vector<codec::Payload>& payloads);

    Role role_;
    PartyConfig cfg_;
    bool started_ = false;
    bool established_ = false;
    AbortReason abort_reason_ = AbortReason::None;
    int expected_msg_ = 0;  // next incoming message index; 0 = not started

    Bytes cky_i_, cky_r_;
    Bytes ni_, nr_;
    std::optional<KeyPair> ephemeral_;
    curve::Point peer_ke_ = curve::Point::infinity();
    curve::Point shared_ = curve::Point::infinity();
    Bytes sa_i_b_, sa_r_b_;
    Bytes peer_id_;
    std::optional<kdf::SkeyidSet> keys_;
    Instrumentation counters_;
};

// Human-readable payload listing for transcripts, e.g.
// "HDR(improved) KE(43) NONCE(16)"; never throws (reports undecodable input).
std::string describe_message(BytesView octets);

struct TranscriptEntry {
    std::size_t index = 0;  // 1-based
    Role sender = Role::Initiator;
    Bytes octets;           // as delivered on the wire
    std::string summary;
    Instrumentation initiator_counters;
    Instrumentation responder_counters;
};

}  // namespace ecike::handshake
