#include "ecike/sim.hpp"

#include <algorithm>
#include <cstdio>

#include "ecike/ecies.hpp"

namespace ecike::sim {

using handshake::AbortReason;
using handshake::EventKind;
using handshake::Instrumentation;
using handshake::Party;
using handshake::PartyConfig;
using handshake::Role;
using handshake::TranscriptEntry;
using codec::ExchangeMode;
using codec::Payload;
using codec::PayloadKind;

std::string_view adversary_name(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::None: return "none";
        case AdversaryKind::PassiveEavesdrop: return "passive_eavesdrop";
        case AdversaryKind::MitmKeSwap: return "mitm_ke_swap";
        case AdversaryKind::TamperSweep: return "tamper_sweep";
        case AdversaryKind::Flood: return "flood";
    }
    return "?";
}

AdversaryKind adversary_from_name(std::string_view name) {
    if (name == "none") return AdversaryKind::None;
    if (name == "passive_eavesdrop" || name == "eavesdrop") return AdversaryKind::PassiveEavesdrop;
    if (name == "mitm_ke_swap") return AdversaryKind::MitmKeSwap;
    if (name == "tamper_sweep") return AdversaryKind::TamperSweep;
    if (name == "flood") return AdversaryKind::Flood;
    throw LookupError("unknown scenario adversary: " + std::string(name));
}

SessionFixture make_fixture(ExchangeMode mode, const curve::Params& params, std::uint64_t seed) {
    DeterministicRng ca_rng(seed, "ca");
    DeterministicRng lt_i_rng(seed, "long-term-initiator");
    DeterministicRng lt_r_rng(seed, "long-term-responder");
    DeterministicRng issue_rng(seed, "ca-issue");
    DeterministicRng proposal_rng(seed, "proposal");

    const pki::CertificateAuthority ca(keygen(ca_rng, params), to_bytes("testbed-root-ca"));
    const KeyPair lt_i = keygen(lt_i_rng, params);
    const KeyPair lt_r = keygen(lt_r_rng, params);

    SessionFixture fx;
    fx.id_i = to_bytes("initiator@example.test");
    fx.id_r = to_bytes("responder@example.test");

    const pki::Certificate cert_i = ca.issue(fx.id_i, lt_i.public_point, params, issue_rng);
    const pki::Certificate cert_r = ca.issue(fx.id_r, lt_r.public_point, params, issue_rng);

    codec::SaBody sa_i{params.group_id, proposal_rng.bytes(16)};
    codec::SaBody sa_r{params.group_id, proposal_rng.bytes(16)};
    fx.sa_i_body = codec::encode_sa(sa_i);
    fx.sa_r_body = codec::encode_sa(sa_r);

    fx.initiator_config = PartyConfig{mode,   &params, lt_i,       cert_i, ca.public_key(),
                                      &params, cert_r, fx.id_i, sa_i};
    fx.responder_config = PartyConfig{mode,   &params, lt_r,       cert_r, ca.public_key(),
                                      &params, cert_i, fx.id_r, sa_r};
    return fx;
}

namespace {

class Adversary {
public:
    virtual ~Adversary() = default;
    virtual Bytes on_message(std::size_t index, Role sender, const Bytes& octets) {
        (void)index;
        (void)sender;
        return octets;
    }

    std::vector<std::string> notes;
};

struct RunOutcome {
    bool initiator_established = false;
    bool responder_established = false;
    AbortReason reason = AbortReason::None;
    std::string aborted_by;
};

RunOutcome run_session(Party& initiator, Party& responder, Adversary& adversary, Rng& rng_i,
                       Rng& rng_r, std::vector<TranscriptEntry>& transcript) {
    std::optional<Bytes> msg = initiator.start(rng_i);
    responder.start(rng_r);

    std::size_t index = 1;
    Role sender = Role::Initiator;
    while (msg) {
        const Bytes delivered = adversary.on_message(index, sender, *msg);
        Party& receiver = sender == Role::Initiator ? responder : initiator;
        Rng& receiver_rng = sender == Role::Initiator ? rng_r : rng_i;
        const auto result = receiver.step(delivered, receiver_rng);
        transcript.push_back(TranscriptEntry{index, sender, delivered,
                                             handshake::describe_message(delivered),
                                             initiator.counters(), responder.counters()});
        if (result.event == EventKind::Aborted) {
            return RunOutcome{initiator.established(), responder.established(), result.reason,
                              std::string(handshake::role_name(receiver.role()))};
        }
        msg = result.outgoing;
        sender = sender == Role::Initiator ? Role::Responder : Role::Initiator;
        ++index;
    }
    return RunOutcome{initiator.established(), responder.established(), AbortReason::None, ""};
}

bool contains_subsequence(BytesView haystack, BytesView needle) {
    if (needle.empty() || needle.size() > haystack.size()) return false;
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
           haystack.end();
}

// Active man-in-the-middle for the KE substitution attack. Holds one keypair
// A = a*G, replaces both KE payloads with A, and re-encrypts every block
// whose key it can now compute (the msg4 ECDH-derived key and the
// SKEYID_e-derived keys are all reachable from a and the public nonces).
// Long-term certificate keys stay out of reach, so HASH signatures are the
// detection point.
class MitmKeSwap final : public Adversary {
public:
    MitmKeSwap(const curve::Params& params, ExchangeMode mode, std::uint64_t seed)
        : params_(params), mode_(mode), rng_(seed, "adversary") {
        own_ = keygen(rng_, params_);
    }

    Bytes on_message(std::size_t index, Role sender, const Bytes& octets) override {
        try {
            return process(index, sender, octets);
        } catch (const Error&) {
            return octets;  // relay anything we cannot usefully rewrite
        }
    }

private:
    Bytes process(std::size_t index, Role sender, const Bytes& octets) {
        auto [header, payloads] = codec::decode_message(octets);
        cky_i_ = header.cky_i;
        if (!std::all_of(header.cky_r.begin(), header.cky_r.end(),
                         [](std::uint8_t v) { return v == 0; }))
            cky_r_ = header.cky_r;

        bool changed = false;
        if (index == 3 || index == 4) {
            for (Payload& p : payloads) {
                if (p.kind == PayloadKind::Ke) {
                    const curve::Point original = curve::decode_point(p.body, params_);
                    (index == 3 ? ke_i_ : ke_r_) = original;
                    p.body = curve::encode_point(own_.public_point, params_);
                    changed = true;
                } else if (p.kind == PayloadKind::Nonce) {
                    (index == 3 ? ni_ : nr_) = p.body;
                }
            }
        }
        if (index == 4 && mode_ == ExchangeMode::ImprovedMain) {
            for (Payload& p : payloads) {
                if (p.kind != PayloadKind::SymBlob) continue;
                // Sealed by the responder under x(Kr*A) == x(a*KEr); the
                // initiator will open with x(Ki*A) == x(a*KEi).
                const Bytes key_out = msg4_key(ke_r_);
                const Bytes key_in = msg4_key(ke_i_);
                const Bytes plain = sym_decrypt(key_out, decode_sym(p.body));
                note_observed_ids(plain, 4);
                p.body = encode_sym(sym_encrypt(key_in, plain, rng_));
                changed = true;
            }
        }
        if (index == 5 || index == 6) {
            const bool from_initiator = sender == Role::Initiator;
            const Bytes key_out = kdf::derive_key(side_skeyid_e(from_initiator), "enc");
            const Bytes key_in = kdf::derive_key(side_skeyid_e(!from_initiator), "enc");
            for (Payload& p : payloads) {
                if (p.kind != PayloadKind::SymBlob) continue;
                const Bytes plain = sym_decrypt(key_out, decode_sym(p.body));
                note_observed_ids(plain, index);
                p.body = encode_sym(sym_encrypt(key_in, plain, rng_));
                changed = true;
            }
        }
        return changed ? codec::encode_message(header, payloads) : octets;
    }

    Bytes msg4_key(const curve::Point& victim_ke) {
        const curve::Point shared = curve::scalar_mul(own_.secret, victim_ke, params_);
        return kdf::derive_key(kdf::point_secret_octets(shared, params_), "msg4");
    }

    Bytes side_skeyid_e(bool initiator_side) {
        kdf::KeyMaterialInputs in;
        in.params = &params_;
        in.ni_b = ni_;
        in.nr_b = nr_;
        in.cky_i = cky_i_;
        in.cky_r = cky_r_;
        in.shared_point =
            curve::scalar_mul(own_.secret, initiator_side ? ke_i_ : ke_r_, params_);
        return kdf::derive_chain(kdf::skeyid_sig(in), in).skeyid_e;
    }

    void note_observed_ids(BytesView block, std::size_t index) {
        try {
            for (const Payload& p : codec::decode_payloads(block)) {
                if (p.kind == PayloadKind::Id) {
                    notes.push_back("mitm read " + std::string(p.body.begin(), p.body.end()) +
                                    " from message " + std::to_string(index) +
                                    " before detection");
                }
            }
        } catch (const ParseError&) {
        }
    }

    const curve::Params& params_;
    ExchangeMode mode_;
    DeterministicRng rng_;
    KeyPair own_;
    Bytes cky_i_{Bytes(8, 0)}, cky_r_{Bytes(8, 0)};
    Bytes ni_, nr_;
    curve::Point ke_i_ = curve::Point::infinity();
    curve::Point ke_r_ = curve::Point::infinity();
};

// Flips the last octet of one payload body in one message.
class TamperOne final : public Adversary {
public:
    TamperOne(std::size_t message_index, std::size_t payload_ordinal)
        : message_index_(message_index), payload_ordinal_(payload_ordinal) {}

    Bytes on_message(std::size_t index, Role, const Bytes& octets) override {
        if (index != message_index_) return octets;
        try {
            auto [header, payloads] = codec::decode_message(octets);
            if (payload_ordinal_ >= payloads.size()) return octets;
            Bytes& body = payloads[payload_ordinal_].body;
            if (body.empty()) return octets;
            body.back() ^= 0x01;
            return codec::encode_message(header, payloads);
        } catch (const ParseError&) {
            return octets;
        }
    }

private:
    std::size_t message_index_;
    std::size_t payload_ordinal_;
};

bool attack_detected_reason(AbortReason reason) {
    switch (reason) {
        case AbortReason::InvalidKePoint:
        case AbortReason::DecryptFailed:
        case AbortReason::CertificateInvalid:
        case AbortReason::IdentityMismatch:
        case AbortReason::SignatureFailed:
            return true;
        default:
            return false;
    }
}

void append_counters(std::string& out, const char* prefix, const Instrumentation& c) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%s.scalar_mults=%u\n%s.signatures_made=%u\n%s.signatures_verified=%u\n"
                  "%s.pkc_encryptions=%u\n%s.pkc_decryptions=%u\n%s.sym_ops=%u\n"
                  "%s.messages_sent=%u\n%s.messages_received=%u\n",
                  prefix, c.scalar_mults, prefix, c.signatures_made, prefix,
                  c.signatures_verified, prefix, c.pkc_encryptions, prefix, c.pkc_decryptions,
                  prefix, c.sym_ops, prefix, c.messages_sent, prefix, c.messages_received);
    out += buf;
}

}  // namespace

std::string ScenarioReport::outcome_string() const {
    switch (outcome) {
        case OutcomeKind::Established:
            return "established";
        case OutcomeKind::Aborted:
            return "aborted(" + aborted_by + ": " +
                   std::string(handshake::abort_reason_name(abort_reason)) + ")";
        case OutcomeKind::AttackerDetected:
            return "attacker_detected(" + aborted_by + ": " +
                   std::string(handshake::abort_reason_name(abort_reason)) + ")";
    }
    return "?";
}

std::string ScenarioReport::to_records() const {
    std::string out;
    out += "scenario.mode=" + std::string(codec::mode_name(scenario.mode)) + "\n";
    out += "scenario.curve=" + scenario.curve_name + "\n";
    out += "scenario.seed=" + std::to_string(scenario.seed) + "\n";
    out += "scenario.adversary=" + std::string(adversary_name(scenario.adversary)) + "\n";
    out += "outcome=" + outcome_string() + "\n";
    for (const TranscriptEntry& entry : transcript) {
        const std::string p = "message." + std::to_string(entry.index);
        out += p + ".dir=" + (entry.sender == Role::Initiator ? "I->R" : "R->I") + "\n";
        out += p + ".summary=" + entry.summary + "\n";
        out += p + ".octets=" + to_hex(entry.octets) + "\n";
    }
    for (const LeakageEntry& l : leakage) {
        out += "leakage." + l.secret_name + "=" + (l.found_in_clear ? "clear" : "hidden") + "\n";
    }
    append_counters(out, "counters.initiator", initiator_counters);
    append_counters(out, "counters.responder", responder_counters);
    for (std::size_t i = 0; i < notes.size(); ++i) {
        out += "note." + std::to_string(i + 1) + "=" + notes[i] + "\n";
    }
    return out;
}

ScenarioReport run(const Scenario& scenario) {
    if (scenario.adversary == AdversaryKind::TamperSweep ||
        scenario.adversary == AdversaryKind::Flood) {
        throw DomainError("use tamper_sweep()/flood() for sweep-style scenarios");
    }

    const curve::Params& params = curve::params_for(scenario.curve_name);
    const SessionFixture fx = make_fixture(scenario.mode, params, scenario.seed);

    Party initiator(Role::Initiator, fx.initiator_config);
    Party responder(Role::Responder, fx.responder_config);
    DeterministicRng rng_i(scenario.seed, "initiator");
    DeterministicRng rng_r(scenario.seed, "responder");

    std::unique_ptr<Adversary> adversary;
    if (scenario.adversary == AdversaryKind::MitmKeSwap) {
        adversary = std::make_unique<MitmKeSwap>(params, scenario.mode, scenario.seed);
    } else {
        adversary = std::make_unique<Adversary>();
    }

    ScenarioReport report;
    report.scenario = scenario;
    const RunOutcome outcome =
        run_session(initiator, responder, *adversary, rng_i, rng_r, report.transcript);

    if (outcome.reason == AbortReason::None && outcome.initiator_established &&
        outcome.responder_established) {
        report.outcome = OutcomeKind::Established;
    } else if (scenario.adversary != AdversaryKind::None &&
               scenario.adversary != AdversaryKind::PassiveEavesdrop &&
               attack_detected_reason(outcome.reason)) {
        report.outcome = OutcomeKind::AttackerDetected;
    } else {
        report.outcome = OutcomeKind::Aborted;
    }
    report.abort_reason = outcome.reason;
    report.aborted_by = outcome.aborted_by;
    report.initiator_counters = initiator.counters();
    report.responder_counters = responder.counters();
    report.notes = adversary->notes;

    // Exact-substring leakage probe over every on-wire octet string.
    const std::vector<std::pair<std::string, const Bytes*>> secrets = {
        {"sa_i", &fx.sa_i_body}, {"sa_r", &fx.sa_r_body}, {"id_i", &fx.id_i}, {"id_r", &fx.id_r}};
    for (const auto& [name, secret] : secrets) {
        bool found = false;
        for (const TranscriptEntry& entry : report.transcript) {
            if (contains_subsequence(entry.octets, *secret)) {
                found = true;
                break;
            }
        }
        report.leakage.push_back(LeakageEntry{name, found});
    }
    return report;
}

namespace {

std::string tamper_field_label(ExchangeMode mode, std::size_t message_index, PayloadKind kind,
                               Role sender) {
    switch (kind) {
        case PayloadKind::Sa:
        case PayloadKind::PkcBlob:
            return message_index == 1 ? "sa_i" : "sa_r";
        case PayloadKind::Ke:
            return sender == Role::Initiator ? "ke_i" : "ke_r";
        case PayloadKind::Nonce:
            return sender == Role::Initiator ? "nonce_i" : "nonce_r";
        case PayloadKind::SymBlob:
            if (mode == ExchangeMode::ImprovedMain)
                return message_index == 4 ? "auth_block_r" : "auth_block_i";
            return message_index == 5 ? "auth_block_i" : "auth_block_r";
        default:
            return std::string(codec::payload_kind_name(kind));
    }
}

}  // namespace

std::vector<std::string> TamperReport::aborted_fields() const {
    std::vector<std::string> out;
    for (const TamperPosition& p : positions) {
        if (p.aborted && std::find(out.begin(), out.end(), p.field) == out.end())
            out.push_back(p.field);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string TamperReport::to_records() const {
    std::string out;
    out += "tamper.mode=" + std::string(codec::mode_name(mode)) + "\n";
    out += "tamper.curve=" + curve_name + "\n";
    out += "tamper.seed=" + std::to_string(seed) + "\n";
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const std::string p = "position." + std::to_string(i + 1);
        out += p + ".message=" + std::to_string(positions[i].message_index) + "\n";
        out += p + ".field=" + positions[i].field + "\n";
        out += p + ".aborted=" + (positions[i].aborted ? "true" : "false") + "\n";
        out += p + ".reason=" + std::string(handshake::abort_reason_name(positions[i].reason)) +
               "\n";
    }
    return out;
}

TamperReport tamper_sweep(ExchangeMode mode, const std::string& curve_name, std::uint64_t seed) {
    const curve::Params& params = curve::params_for(curve_name);

    // Honest reference run to learn the message/payload layout.
    Scenario honest{mode, curve_name, seed, AdversaryKind::None, 0};
    const ScenarioReport reference = run(honest);

    TamperReport report;
    report.mode = mode;
    report.curve_name = curve_name;
    report.seed = seed;

    for (const TranscriptEntry& entry : reference.transcript) {
        const auto [header, payloads] = codec::decode_message(entry.octets);
        for (std::size_t ordinal = 0; ordinal < payloads.size(); ++ordinal) {
            const SessionFixture fx = make_fixture(mode, params, seed);
            Party initiator(Role::Initiator, fx.initiator_config);
            Party responder(Role::Responder, fx.responder_config);
            DeterministicRng rng_i(seed, "initiator");
            DeterministicRng rng_r(seed, "responder");
            TamperOne adversary(entry.index, ordinal);

            std::vector<TranscriptEntry> transcript;
            const RunOutcome outcome =
                run_session(initiator, responder, adversary, rng_i, rng_r, transcript);
            const bool aborted = outcome.reason != AbortReason::None ||
                                 !outcome.initiator_established ||
                                 !outcome.responder_established;
            report.positions.push_back(TamperPosition{
                entry.index,
                tamper_field_label(mode, entry.index, payloads[ordinal].kind, entry.sender),
                aborted, outcome.reason});
        }
    }
    return report;
}

std::string FloodReport::to_records() const {
    std::string out;
    out += "flood.mode=" + std::string(codec::mode_name(mode)) + "\n";
    out += "flood.curve=" + curve_name + "\n";
    out += "flood.messages=" + std::to_string(messages) + "\n";
    append_counters(out, "flood.responder", responder_totals);
    char buf[96];
    std::snprintf(buf, sizeof buf, "flood.avg_pkc_decryptions=%.3f\nflood.avg_scalar_mults=%.3f\n",
                  avg_pkc_decryptions, avg_scalar_mults);
    out += buf;
    out += "flood.note=flood resistance is reported as measured cost only; no verdict attached\n";
    return out;
}

FloodReport flood(ExchangeMode mode, const std::string& curve_name, unsigned n,
                  std::uint64_t seed) {
    if (n < 1) throw DomainError("flood needs at least one message");
    const curve::Params& params = curve::params_for(curve_name);
    const SessionFixture fx = make_fixture(mode, params, seed);
    DeterministicRng attack_rng(seed, "flood");
    DeterministicRng responder_rng(seed, "responder");

    FloodReport report;
    report.mode = mode;
    report.curve_name = curve_name;
    report.messages = n;

    for (unsigned i = 0; i < n; ++i) {
        // Bogus-but-well-formed first message from a fresh fake initiator:
        // an SA body with an unregistered group so the responder always
        // rejects after doing whatever work message 1 forces on it.
        Bytes bogus_sa{0xFF};
        append(bogus_sa, attack_rng.bytes(23));

        std::vector<Payload> payloads;
        if (mode == ExchangeMode::ImprovedMain) {
            const curve::Point responder_pub =
                curve::decode_point(fx.responder_config.own_cert.public_point, params);
            const EciesCiphertext ct = ecies_encrypt(responder_pub, bogus_sa, attack_rng, params);
            payloads.push_back(Payload{PayloadKind::PkcBlob, encode_ecies(ct, params)});
        } else {
            payloads.push_back(Payload{PayloadKind::Sa, bogus_sa});
        }
        codec::MessageHeader header;
        header.cky_i = attack_rng.bytes(8);
        header.cky_r = Bytes(8, 0);
        header.mode = mode;
        const Bytes msg = codec::encode_message(header, payloads);

        Party responder(Role::Responder, fx.responder_config);
        responder.start(responder_rng);
        responder.step(msg, responder_rng);

        const Instrumentation& c = responder.counters();
        report.responder_totals.scalar_mults += c.scalar_mults;
        report.responder_totals.signatures_made += c.signatures_made;
        report.responder_totals.signatures_verified += c.signatures_verified;
        report.responder_totals.pkc_encryptions += c.pkc_encryptions;
        report.responder_totals.pkc_decryptions += c.pkc_decryptions;
        report.responder_totals.sym_ops += c.sym_ops;
        report.responder_totals.messages_sent += c.messages_sent;
        report.responder_totals.messages_received += c.messages_received;
    }
    report.avg_pkc_decryptions = double(report.responder_totals.pkc_decryptions) / n;
    report.avg_scalar_mults = double(report.responder_totals.scalar_mults) / n;
    return report;
}

}  // namespace ecike::sim
