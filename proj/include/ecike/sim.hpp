// sim.hpp
//
// Deterministic in-memory network driving two handshake parties through a
// pluggable adversary. A scenario seed fixes every byte of the run: party
// keys, cookies, nonces, certificate authority, adversary randomness.
//
// Adversaries:
//   none              honest delivery
//   passive_eavesdrop records traffic; reports which secrets appear verbatim
//   mitm_ke_swap      active: substitutes both KE points with its own and
//                     re-encrypts what it can compute keys for; detected by
//                     signature verification
//   tamper_sweep      one run per payload position, flipping one octet
//   flood             cost probe: bogus first messages against a responder

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ecike/handshake.hpp"

namespace ecike::sim {

enum class AdversaryKind : std::uint8_t {
    None,
    PassiveEavesdrop,
    MitmKeSwap,
    TamperSweep,
    Flood,
};

std::string_view adversary_name(AdversaryKind kind);
AdversaryKind adversary_from_name(std::string_view name);  // throws LookupError

struct Scenario {
    codec::ExchangeMode mode = codec::ExchangeMode::ImprovedMain;
    std::string curve_name = "K-233";
    std::uint64_t seed = 1;
    AdversaryKind adversary = AdversaryKind::None;
    unsigned flood_count = 10;  // used by AdversaryKind::Flood only
};

enum class OutcomeKind : std::uint8_t { Established, Aborted, AttackerDetected };

struct LeakageEntry {
    std::string secret_name;
    bool found_in_clear = false;
};

struct ScenarioReport {
    Scenario scenario;
    OutcomeKind outcome = OutcomeKind::Established;
    handshake::AbortReason abort_reason = handshake::AbortReason::None;
    std::string aborted_by;  // "initiator" / "responder" / ""
    std::vector<handshake::TranscriptEntry> transcript;
    std::vector<LeakageEntry> leakage;
    handshake::Instrumentation initiator_counters;
    handshake::Instrumentation responder_counters;
    std::vector<std::string> notes;

    std::string outcome_string() const;
    // Line-delimited key=value records with stable field order.
    std::string to_records() const;
};

ScenarioReport run(const Scenario& scenario);

struct TamperPosition {
    std::size_t message_index = 0;  // 1-based
    std::string field;              // logical payload label, e.g. "sa_r"
    bool aborted = false;
    handshake::AbortReason reason = handshake::AbortReason::None;
};

struct TamperReport {
    codec::ExchangeMode mode;
    std::string curve_name;
    std::uint64_t seed = 0;
    std::vector<TamperPosition> positions;

    std::vector<std::string> aborted_fields() const;
    std::string to_records() const;
};

// Flips the last octet of each payload of each message of an otherwise
// honest run, one position per run, and records whether either party aborts.
TamperReport tamper_sweep(codec::ExchangeMode mode, const std::string& curve_name,
                          std::uint64_t seed);

struct FloodReport {
    codec::ExchangeMode mode;
    std::string curve_name;
    unsigned messages = 0;
    handshake::Instrumentation responder_totals;
    double avg_pkc_decryptions = 0.0;
    double avg_scalar_mults = 0.0;

    std::string to_records() const;
};

// Sends n syntactically valid first messages from fresh fake initiators and
// totals the responder-side cost counters. Measurement only; no verdict is
// attached to the flood-resistance claim.
FloodReport flood(codec::ExchangeMode mode, const std::string& curve_name, unsigned n,
                  std::uint64_t seed);

// Deterministic fixture shared by scenarios, tests, and the CLI: CA on the
// session curve, two certified parties, seeded proposals and identities.
struct SessionFixture {
    handshake::PartyConfig initiator_config;
    handshake::PartyConfig responder_config;
    Bytes sa_i_body, sa_r_body;  // plaintext SA bodies (leakage probes)
    Bytes id_i, id_r;
};

SessionFixture make_fixture(codec::ExchangeMode mode, const curve::Params& params,
                            std::uint64_t seed);

}  // namespace ecike::sim
