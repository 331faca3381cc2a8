// codec.hpp
//
// Bit-exact wire format for the simulator's ISAKMP-style messages: a fixed
// 22-octet header (cookies, exchange mode, flags, total length) followed by
// typed payloads framed as kind ‖ 2-octet length ‖ body. All multi-octet
// integers big-endian. Deliberately simpler than RFC 2408 (no DOI, no
// proposal/transform nesting); the exchange logic is the subject here, not
// the encoding minutiae.

#pragma once

#include <string_view>
#include <vector>

#include "ecike/bytes.hpp"

namespace ecike::codec {

enum class ExchangeMode : std::uint8_t {
    BaselineMain = 1,   // six-message main mode
    ImprovedMain = 2,   // five-message protected mode
};

std::string_view mode_name(ExchangeMode mode);
ExchangeMode mode_from_name(std::string_view name);  // throws LookupError

// Header flag bit 0: the payloads that follow are encrypted (the HDR*
// convention).
inline constexpr std::uint8_t kFlagEncrypted = 0x01;

struct MessageHeader {
    Bytes cky_i;  // 8 octets
    Bytes cky_r;  // 8 octets; all-zero only in message 1
    ExchangeMode mode = ExchangeMode::BaselineMain;
    std::uint8_t flags = 0;

    friend bool operator==(const MessageHeader&, const MessageHeader&) = default;
};

inline constexpr std::size_t kHeaderLen = 8 + 8 + 1 + 1 + 4;
inline constexpr std::size_t kMaxMessageLen = 64 * 1024;

enum class PayloadKind : std::uint8_t {
    Sa = 1,
    Ke = 2,
    Nonce = 3,
    Id = 4,
    Cert = 5,
    Sig = 6,
    PkcBlob = 7,   // hybrid public-key ciphertext
    SymBlob = 8,   // symmetric ciphertext
};

std::string_view payload_kind_name(PayloadKind kind);

struct Payload {
    PayloadKind kind;
    Bytes body;

    friend bool operator==(const Payload&, const Payload&) = default;
};

// SA body: 1-octet DH group identifier followed by the opaque proposal.
struct SaBody {
    int group_id = 0;
    Bytes proposal;

    friend bool operator==(const SaBody&, const SaBody&) = default;
};

Bytes encode_message(const MessageHeader& header, const std::vector<Payload>& payloads);
std::pair<MessageHeader, std::vector<Payload>> decode_message(BytesView in);  // throws ParseError

// Payload list without a header; the plaintext form inside encrypted blocks.
Bytes encode_payloads(const std::vector<Payload>& payloads);
std::vector<Payload> decode_payloads(BytesView in);  // throws ParseError

Bytes encode_sa(const SaBody& sa);
SaBody decode_sa(BytesView in);  // throws ParseError

// {5: K-163, 15: K-233, 16: K-283, 17: K-409, 18: K-571}. These identifiers
// originally named MODP groups; this registry rebinds them to the binary
// curves and never implements the MODP meanings.
std::string_view group_registry(int group_id);  // throws LookupError

}  // namespace ecike::codec
