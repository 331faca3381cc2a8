#include "ecike/aead.hpp"

#include <bit>
#include <cstring>

namespace ecike {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u32 load32_le(const std::uint8_t* p) {
    return u32{p[0]} | u32{p[1]} << 8 | u32{p[2]} << 16 | u32{p[3]} << 24;
}

void store32_le(std::uint8_t* p, u32 v) {
    p[0] = static_cast<std::uint8_t>(v);
    p[1] = static_cast<std::uint8_t>(v >> 8);
    p[2] = static_cast<std::uint8_t>(v >> 16);
    p[3] = static_cast<std::uint8_t>(v >> 24);
}

void quarter_round(u32& a, u32& b, u32& c, u32& d) {
    a += b; d ^= a; d = std::rotl(d, 16);
    c += d; b ^= c; b = std::rotl(b, 12);
    a += b; d ^= a; d = std::rotl(d, 8);
    c += d; b ^= c; b = std::rotl(b, 7);
}

// key 32 octets, nonce 12 octets
void keystream_xor(BytesView key, BytesView nonce, u32 counter, const std::uint8_t* in,
                   std::uint8_t* out, std::size_t len) {
    std::size_t off = 0;
    while (off < len) {
        const auto block = chacha20_block(key, counter++, nonce);
        const std::size_t take = std::min<std::size_t>(64, len - off);
        for (std::size_t i = 0; i < take; ++i) out[off + i] = in[off + i] ^ block[i];
        off += take;
    }
}

// Poly1305 with 26-bit limbs.
class Poly1305 {
public:
    explicit Poly1305(const std::uint8_t key[32]) {
        const u32 t0 = load32_le(key + 0), t1 = load32_le(key + 4);
        const u32 t2 = load32_le(key + 8), t3 = load32_le(key + 12);
        r_[0] = t0 & 0x3ffffff;
        r_[1] = (t0 >> 26 | t1 << 6) & 0x3ffff03;
        r_[2] = (t1 >> 20 | t2 << 12) & 0x3ffc0ff;
        r_[3] = (t2 >> 14 | t3 << 18) & 0x3f03fff;
        r_[4] = (t3 >> 8) & 0x00fffff;
        std::memcpy(pad_, key + 16, 16);
    }

    void update(BytesView data) {
        std::size_t off = 0;
        while (off < data.size()) {
            const std::size_t take = std::min<std::size_t>(16 - buffered_, data.size() - off);
            std::memcpy(buffer_ + buffered_, data.data() + off, take);
            buffered_ += take;
            off += take;
            if (buffered_ == 16) {
                process(buffer_, 0x1000000);  // 2^128 bit for a full block
                buffered_ = 0;
            }
        }
    }

    void pad_to_block() {
        if (buffered_ == 0) return;
        std::memset(buffer_ + buffered_, 0, 16 - buffered_);
        process(buffer_, 0x1000000);
        buffered_ = 0;
    }

    void finish(std::uint8_t tag[16]) {
        if (buffered_) {
            buffer_[buffered_] = 1;  // append the 2^n bit
            std::memset(buffer_ + buffered_ + 1, 0, 16 - buffered_ - 1);
            process(buffer_, 0);
        }
        // full carry propagation and reduction mod 2^130 - 5
        u64 h0 = h_[0], h1 = h_[1], h2 = h_[2], h3 = h_[3], h4 = h_[4];
        u64 c;
        c = h1 >> 26; h1 &= 0x3ffffff; h2 += c;
        c = h2 >> 26; h2 &= 0x3ffffff; h3 += c;
        c = h3 >> 26; h3 &= 0x3ffffff; h4 += c;
        c = h4 >> 26; h4 &= 0x3ffffff; h0 += c * 5;
        c = h0 >> 26; h0 &= 0x3ffffff; h1 += c;

        // compute h + -p and select
        u64 g0 = h0 + 5;
        c = g0 >> 26; g0 &= 0x3ffffff;
        u64 g1 = h1 + c;
        c = g1 >> 26; g1 &= 0x3ffffff;
        u64 g2 = h2 + c;
        c = g2 >> 26; g2 &= 0x3ffffff;
        u64 g3 = h3 + c;
        c = g3 >> 26; g3 &= 0x3ffffff;
        u64 g4 = h4 + c;
        if (g4 >> 26) {  // h >= p
            h0 = g0; h1 = g1; h2 = g2; h3 = g3; h4 = g4 & 0x3ffffff;
        }

        u64 f0 = (h0 | h1 << 26) & 0xffffffff;
        u64 f1 = (h1 >> 6 | h2 << 20) & 0xffffffff;
        u64 f2 = (h2 >> 12 | h3 << 14) & 0xffffffff;
        u64 f3 = (h3 >> 18 | h4 << 8) & 0xffffffff;

        f0 += load32_le(pad_ + 0);
        f1 += load32_le(pad_ + 4) + (f0 >> 32);
        f2 += load32_le(pad_ + 8) + (f1 >> 32);
        f3 += load32_le(pad_ + 12) + (f2 >> 32);
        store32_le(tag + 0, static_cast<u32>(f0));
        store32_le(tag + 4, static_cast<u32>(f1));
        store32_le(tag + 8, static_cast<u32>(f2));
        store32_le(tag + 12, static_cast<u32>(f3));
    }

private:
    void process(const std::uint8_t block[16], u32 hibit) {
        const u32 t0 = load32_le(block + 0), t1 = load32_le(block + 4);
        const u32 t2 = load32_le(block + 8), t3 = load32_le(block + 12);
        h_[0] += t0 & 0x3ffffff;
        h_[1] += (t0 >> 26 | t1 << 6) & 0x3ffffff;
        h_[2] += (t1 >> 20 | t2 << 12) & 0x3ffffff;
        h_[3] += (t2 >> 14 | t3 << 18) & 0x3ffffff;
        h_[4] += (t3 >> 8) | hibit;

        const u64 s1 = r_[1] * 5, s2 = r_[2] * 5, s3 = r_[3] * 5, s4 = r_[4] * 5;
        u128 d0 = (u128)h_[0] * r_[0] + (u128)h_[1] * s4 + (u128)h_[2] * s3 + (u128)h_[3] * s2 + (u128)h_[4] * s1;
        u128 d1 = (u128)h_[0] * r_[1] + (u128)h_[1] * r_[0] + (u128)h_[2] * s4 + (u128)h_[3] * s3 + (u128)h_[4] * s2;
        u128 d2 = (u128)h_[0] * r_[2] + (u128)h_[1] * r_[1] + (u128)h_[2] * r_[0] + (u128)h_[3] * s4 + (u128)h_[4] * s3;
        u128 d3 = (u128)h_[0] * r_[3] + (u128)h_[1] * r_[2] + (u128)h_[2] * r_[1] + (u128)h_[3] * r_[0] + (u128)h_[4] * s4;
        u128 d4 = (u128)h_[0] * r_[4] + (u128)h_[1] * r_[3] + (u128)h_[2] * r_[2] + (u128)h_[3] * r_[1] + (u128)h_[4] * r_[0];

        u64 c = static_cast<u64>(d0 >> 26);
        h_[0] = static_cast<u64>(d0) & 0x3ffffff;
        d1 += c;
        c = static_cast<u64>(d1 >> 26);
        h_[1] = static_cast<u64>(d1) & 0x3ffffff;
        d2 += c;
        c = static_cast<u64>(d2 >> 26);
        h_[2] = static_cast<u64>(d2) & 0x3ffffff;
        d3 += c;
        c = static_cast<u64>(d3 >> 26);
        h_[3] = static_cast<u64>(d3) & 0x3ffffff;
        d4 += c;
        c = static_cast<u64>(d4 >> 26);
        h_[4] = static_cast<u64>(d4) & 0x3ffffff;
        h_[0] += c * 5;
        c = h_[0] >> 26;
        h_[0] &= 0x3ffffff;
        h_[1] += c;
    }

    u64 r_[5];
    u64 h_[5] = {};
    std::uint8_t pad_[16];
    std::uint8_t buffer_[16];
    std::size_t buffered_ = 0;
};

void append_len_le(Bytes& out, u64 len) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(len >> (8 * i)));
}

Bytes poly1305_mac(BytesView otk, BytesView aad, BytesView ciphertext) {
    Poly1305 mac(otk.data());
    mac.update(aad);
    mac.pad_to_block();
    mac.update(ciphertext);
    mac.pad_to_block();
    Bytes lengths;
    append_len_le(lengths, aad.size());
    append_len_le(lengths, ciphertext.size());
    mac.update(lengths);
    Bytes tag(kAeadTagLen);
    mac.finish(tag.data());
    return tag;
}

void check_params(BytesView key, BytesView nonce) {
    if (key.size() != kAeadKeyLen) throw DomainError("AEAD key must be 32 octets");
    if (nonce.size() != kAeadNonceLen) throw DomainError("AEAD nonce must be 12 octets");
}

}  // namespace

std::array<std::uint8_t, 64> chacha20_block(BytesView key, std::uint32_t counter, BytesView nonce) {
    check_params(key, nonce);
    u32 state[16] = {
        0x61707865, 0x3320646e, 0x79622d32, 0x6b206574,
        load32_le(key.data()),      load32_le(key.data() + 4),
        load32_le(key.data() + 8),  load32_le(key.data() + 12),
        load32_le(key.data() + 16), load32_le(key.data() + 20),
        load32_le(key.data() + 24), load32_le(key.data() + 28),
        counter,
        load32_le(nonce.data()), load32_le(nonce.data() + 4), load32_le(nonce.data() + 8),
    };
    u32 ws[16];
    std::memcpy(ws, state, sizeof(ws));
    for (int round = 0; round < 10; ++round) {
        quarter_round(ws[0], ws[4], ws[8], ws[12]);
        quarter_round(ws[1], ws[5], ws[9], ws[13]);
        quarter_round(ws[2], ws[6], ws[10], ws[14]);
        quarter_round(ws[3], ws[7], ws[11], ws[15]);
        quarter_round(ws[0], ws[5], ws[10], ws[15]);
        quarter_round(ws[1], ws[6], ws[11], ws[12]);
        quarter_round(ws[2], ws[7], ws[8], ws[13]);
        quarter_round(ws[3], ws[4], ws[9], ws[14]);
    }
    std::array<std::uint8_t, 64> out;
    for (int i = 0; i < 16; ++i) store32_le(out.data() + 4 * i, ws[i] + state[i]);
    return out;
}

Bytes aead_seal(BytesView key, BytesView nonce, BytesView plaintext, BytesView aad) {
    check_params(key, nonce);
    const auto otk_block = chacha20_block(key, 0, nonce);
    const BytesView otk{otk_block.data(), 32};

    Bytes out(plaintext.size() + kAeadTagLen);
    keystream_xor(key, nonce, 1, plaintext.data(), out.data(), plaintext.size());
    const Bytes tag = poly1305_mac(otk, aad, {out.data(), plaintext.size()});
    std::memcpy(out.data() + plaintext.size(), tag.data(), kAeadTagLen);
    return out;
}

Bytes aead_open(BytesView key, BytesView nonce, BytesView ciphertext_and_tag, BytesView aad) {
    check_params(key, nonce);
    if (ciphertext_and_tag.size() < kAeadTagLen) throw CryptoError("ciphertext shorter than tag");
    const std::size_t clen = ciphertext_and_tag.size() - kAeadTagLen;
    const BytesView ct = ciphertext_and_tag.subspan(0, clen);
    const BytesView tag = ciphertext_and_tag.subspan(clen);

    const auto otk_block = chacha20_block(key, 0, nonce);
    const Bytes expected = poly1305_mac({otk_block.data(), 32}, aad, ct);
    if (!constant_eq(expected, tag)) throw CryptoError("authentication tag mismatch");

    Bytes plaintext(clen);
    keystream_xor(key, nonce, 1, ct.data(), plaintext.data(), clen);
    return plaintext;
}

}  // namespace ecike
