#include "ecike/bytes.hpp"

#include <cctype>

namespace ecike {

std::string to_hex(BytesView data) {
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0F]);
    }
    return out;
}

static int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(std::string_view hex) {
    std::string compact;
    compact.reserve(hex.size());
    for (char c : hex) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.size() % 2 != 0) throw ParseError("hex string has odd length");
    Bytes out;
    out.reserve(compact.size() / 2);
    for (std::size_t i = 0; i < compact.size(); i += 2) {
        int hi = hex_value(compact[i]);
        int lo = hex_value(compact[i + 1]);
        if (hi < 0 || lo < 0) throw ParseError("non-hex character in input");
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

Bytes concat(std::initializer_list<BytesView> parts) {
    std::size_t total = 0;
    for (auto p : parts) total += p.size();
    Bytes out;
    out.reserve(total);
    for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void append(Bytes& out, BytesView more) {
    out.insert(out.end(), more.begin(), more.end());
}

void append_u16(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void append_u32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

std::uint16_t read_u16(BytesView in, std::size_t offset) {
    if (offset + 2 > in.size()) throw ParseError("truncated 16-bit field");
    return static_cast<std::uint16_t>(in[offset] << 8 | in[offset + 1]);
}

std::uint32_t read_u32(BytesView in, std::size_t offset) {
    if (offset + 4 > in.size()) throw ParseError("truncated 32-bit field");
    return static_cast<std::uint32_t>(in[offset]) << 24 |
           static_cast<std::uint32_t>(in[offset + 1]) << 16 |
           static_cast<std::uint32_t>(in[offset + 2]) << 8 |
           static_cast<std::uint32_t>(in[offset + 3]);
}

bool constant_eq(BytesView a, BytesView b) {
    if (a.size() != b.size()) return false;
    std::uint8_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff |= a[i] ^ b[i];
    return diff == 0;
}

}  // namespace ecike
