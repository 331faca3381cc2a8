#include "ecike/codec.hpp"

namespace ecike::codec {

std::string_view mode_name(ExchangeMode mode) {
    switch (mode) {
        case ExchangeMode::BaselineMain: return "baseline";
        case ExchangeMode::ImprovedMain: return "improved";
    }
    return "?";
}

ExchangeMode mode_from_name(std::string_view name) {
    if (name == "baseline") return ExchangeMode::BaselineMain;
    if (name == "improved") return ExchangeMode::ImprovedMain;
    throw LookupError("unknown mode: " + std::string(name));
}

std::string_view payload_kind_name(PayloadKind kind) {
    switch (kind) {
        case PayloadKind::Sa: return "SA";
        case PayloadKind::Ke: return "KE";
        case PayloadKind::Nonce: return "NONCE";
        case PayloadKind::Id: return "ID";
        case PayloadKind::Cert: return "CERT";
        case PayloadKind::Sig: return "SIG";
        case PayloadKind::PkcBlob: return "PKC_BLOB";
        case PayloadKind::SymBlob: return "SYM_BLOB";
    }
    return "?";
}

namespace {

bool known_kind(std::uint8_t k) {
    return k >= 1 && k <= 8;
}

bool known_mode(std::uint8_t m) {
    return m == 1 || m == 2;
}

}  // namespace

Bytes encode_payloads(const std::vector<Payload>& payloads) {
    Bytes out;
    for (const Payload& p : payloads) {
        if (p.body.size() > 0xFFFF) throw DomainError("payload body too long");
        out.push_back(static_cast<std::uint8_t>(p.kind));
        append_u16(out, static_cast<std::uint16_t>(p.body.size()));
        append(out, p.body);
    }
    return out;
}

std::vector<Payload> decode_payloads(BytesView in) {
    std::vector<Payload> out;
    std::size_t off = 0;
    while (off < in.size()) {
        if (off + 3 > in.size()) throw ParseError("truncated payload header");
        const std::uint8_t kind = in[off];
        if (!known_kind(kind)) throw ParseError("unknown payload kind");
        const std::size_t len = read_u16(in, off + 1);
        off += 3;
        if (off + len > in.size()) throw ParseError("payload body exceeds message");
        out.push_back(Payload{static_cast<PayloadKind>(kind), Bytes(in.begin() + off, in.begin() + off + len)});
        off += len;
    }
    return out;
}

Bytes encode_message(const MessageHeader& header, const std::vector<Payload>& payloads) {
    if (header.cky_i.size() != 8 || header.cky_r.size() != 8)
        throw DomainError("cookies must be 8 octets");
    const Bytes body = encode_payloads(payloads);
    const std::size_t total = kHeaderLen + body.size();
    if (total > kMaxMessageLen) throw DomainError("message exceeds maximum length");

    Bytes out;
    out.reserve(total);
    append(out, header.cky_i);
    append(out, header.cky_r);
    out.push_back(static_cast<std::uint8_t>(header.mode));
    out.push_back(header.flags);
    append_u32(out, static_cast<std::uint32_t>(total));
    append(out, body);
    return out;
}

std::pair<MessageHeader, std::vector<Payload>> decode_message(BytesView in) {
    if (in.size() < kHeaderLen) throw ParseError("message shorter than header");
    if (in.size() > kMaxMessageLen) throw ParseError("message exceeds maximum length");
    MessageHeader h;
    h.cky_i.assign(in.begin(), in.begin() + 8);
    h.cky_r.assign(in.begin() + 8, in.begin() + 16);
    if (!known_mode(in[16])) throw ParseError("unknown exchange mode");
    h.mode = static_cast<ExchangeMode>(in[16]);
    h.flags = in[17];
    if (h.flags & ~kFlagEncrypted) throw ParseError("reserved flag bits set");
    const std::uint32_t total = read_u32(in, 18);
    if (total != in.size()) throw ParseError("message length field mismatch");
    return {std::move(h), decode_payloads(in.subspan(kHeaderLen))};
}

Bytes encode_sa(const SaBody& sa) {
    if (sa.group_id < 0 || sa.group_id > 0xFF) throw DomainError("group id out of range");
    if (sa.proposal.empty()) throw DomainError("empty SA proposal");
    Bytes out{static_cast<std::uint8_t>(sa.group_id)};
    append(out, sa.proposal);
    return out;
}

SaBody decode_sa(BytesView in) {
    if (in.size() < 2) throw ParseError("SA body truncated");
    return SaBody{in[0], Bytes(in.begin() + 1, in.end())};
}

std::string_view group_registry(int group_id) {
    switch (group_id) {
        case 5: return "K-163";
        case 15: return "K-233";
        case 16: return "K-283";
        case 17: return "K-409";
        case 18: return "K-571";
        default: throw LookupError("unregistered DH group identifier: " + std::to_string(group_id));
    }
}

}  // namespace ecike::codec
