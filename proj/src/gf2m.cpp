#include "ecike/gf2m.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace ecike::gf2m {

namespace {

// Degree of the polynomial held in w[0..nw), or -1 for the zero polynomial.
int poly_degree(const std::uint64_t* w, std::size_t nw) {
    for (std::size_t i = nw; i-- > 0;) {
        if (w[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(w[i]));
    }
    return -1;
}

// r ^= a << shift, scatter form: a occupies na words, r must have room for
// word index na + shift/64 when a carry spills.
void xor_shifted(std::uint64_t* r, const std::uint64_t* a, std::size_t na, unsigned shift) {
    const std::size_t wo = shift / 64;
    const unsigned bo = shift % 64;
    if (bo == 0) {
        for (std::size_t i = 0; i < na; ++i) r[i + wo] ^= a[i];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < na; ++i) {
            r[i + wo] ^= (a[i] << bo) | carry;
            carry = a[i] >> (64 - bo);
        }
        if (carry) r[na + wo] ^= carry;
    }
}

constexpr std::size_t kInvWords = kMaxWords + 1;

// dst ^= src << shift over the fixed inversion width; read-side indexing, so
// no write can land outside dst.
void xor_shifted_wide(std::uint64_t* dst, const std::uint64_t* src, unsigned shift) {
    const std::size_t wo = shift / 64;
    const unsigned bo = shift % 64;
    if (bo == 0) {
        for (std::size_t i = kInvWords; i-- > wo;) dst[i] ^= src[i - wo];
    } else {
        for (std::size_t i = kInvWords; i-- > wo;) {
            std::uint64_t v = src[i - wo] << bo;
            if (i > wo) v |= src[i - wo - 1] >> (64 - bo);
            dst[i] ^= v;
        }
    }
}

void field_check(const Element& a, const Element& b) {
    if (a.field() != b.field()) throw DomainError("field mismatch between operands");
}

}  // namespace

Field::Field(FieldId id, unsigned m, std::vector<unsigned> terms)
    : id_(id), m_(m), poly_{m, std::move(terms)}, words_((m + 63) / 64) {
    for (unsigned e : poly_.terms) {
        if (e < m_) low_terms_.push_back(e);
    }
}

const Field& Field::get(FieldId id) {
    static const Field k163(FieldId::K163, 163, {163, 7, 6, 3, 0});
    static const Field k233(FieldId::K233, 233, {233, 74, 0});
    static const Field k283(FieldId::K283, 283, {283, 12, 7, 5, 0});
    static const Field k409(FieldId::K409, 409, {409, 87, 0});
    static const Field k571(FieldId::K571, 571, {571, 10, 5, 2, 0});
    static const Field toy5(FieldId::Toy5, 5, {5, 2, 0});
    switch (id) {
        case FieldId::K163: return k163;
        case FieldId::K233: return k233;
        case FieldId::K283: return k283;
        case FieldId::K409: return k409;
        case FieldId::K571: return k571;
        case FieldId::Toy5: return toy5;
    }
    throw LookupError("unknown field id");
}

void Field::reduce(std::uint64_t* acc, std::size_t acc_words) const {
    const std::size_t mw = m_ / 64;  // word holding bit m (m is odd, so m%64 != 0)
    const unsigned mb = m_ % 64;

    // Fold whole words above the boundary word: bit j of word wi is
    // x^(64*wi+j), and x^(m+t) == x^(t+e) summed over the low terms e of f.
    for (std::size_t wi = acc_words; wi-- > mw + 1;) {
        const std::uint64_t w = acc[wi];
        if (!w) continue;
        acc[wi] = 0;
        const std::size_t base = wi * 64 - m_;
        for (unsigned e : low_terms_) {
            const std::size_t off = base + e;
            const std::size_t ow = off / 64;
            const unsigned ob = off % 64;
            acc[ow] ^= w << ob;
            if (ob) acc[ow + 1] ^= w >> (64 - ob);
        }
    }

    // Boundary word: clear bits >= m. Folding can land back above m when m
    // is small relative to the low terms (the toy field), so loop.
    const std::uint64_t mask = (std::uint64_t{1} << mb) - 1;
    for (;;) {
        const std::uint64_t w = acc[mw] >> mb;
        if (!w) break;
        acc[mw] &= mask;
        for (unsigned e : low_terms_) {
            const std::size_t ow = e / 64;
            const unsigned ob = e % 64;
            acc[ow] ^= w << ob;
            if (ob && ow + 1 <= mw) acc[ow + 1] ^= w >> (64 - ob);
        }
    }
}

Element Element::zero(FieldId f) {
    return Element(f);
}

Element Element::one(FieldId f) {
    Element e(f);
    e.w_[0] = 1;
    return e;
}

Element Element::from_bytes(BytesView in, FieldId f) {
    const Field& fld = Field::get(f);
    if (in.size() > fld.byte_length()) throw ParseError("octet string longer than field width");
    Element e(f);
    for (std::size_t i = 0; i < in.size(); ++i) {
        const std::size_t bit = (in.size() - 1 - i) * 8;
        e.w_[bit / 64] |= std::uint64_t{in[i]} << (bit % 64);
    }
    if (poly_degree(e.w_.data(), kMaxWords) >= static_cast<int>(fld.degree()))
        throw ParseError("encoded value exceeds field degree");
    return e;
}

Element Element::from_hex(std::string_view hex, FieldId f) {
    const Field& fld = Field::get(f);
    std::string compact;
    for (char c : hex) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.size() > fld.hex_length()) throw ParseError("hex string longer than field width");
    std::string padded(2 * fld.byte_length() - compact.size(), '0');
    padded += compact;
    return from_bytes(ecike::from_hex(padded), f);
}

std::string Element::to_hex() const {
    const Field& fld = field_ref();
    std::string full = ecike::to_hex(to_bytes());
    return full.substr(full.size() - fld.hex_length());
}

Bytes Element::to_bytes() const {
    const Field& fld = field_ref();
    Bytes out(fld.byte_length());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t bit = (out.size() - 1 - i) * 8;
        out[i] = static_cast<std::uint8_t>(w_[bit / 64] >> (bit % 64));
    }
    return out;
}

bool Element::is_zero() const {
    for (std::uint64_t v : w_) {
        if (v) return false;
    }
    return true;
}

bool Element::bit(unsigned i) const {
    return (w_[i / 64] >> (i % 64)) & 1;
}

Element add(const Element& a, const Element& b) {
    field_check(a, b);
    Element r = a;
    for (std::size_t i = 0; i < kMaxWords; ++i) r.w_[i] ^= b.w_[i];
    return r;
}

Element mul(const Element& a, const Element& b) {
    field_check(a, b);
    const Field& fld = a.field_ref();
    const std::size_t nw = fld.words();

    // 4-bit window: table[i] = (i as a degree-3 polynomial) * a. Shifting a
    // reduced element left by 3 never overflows the field's word count
    // (m + 2 < 64 * words for every registered field).
    std::uint64_t table[16][kMaxWords] = {};
    for (std::size_t w = 0; w < nw; ++w) table[1][w] = a.w_[w];
    for (unsigned i = 2; i < 16; i += 2) {
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < nw; ++w) {
            table[i][w] = (table[i / 2][w] << 1) | carry;
            carry = table[i / 2][w] >> 63;
        }
        for (std::size_t w = 0; w < nw; ++w) table[i + 1][w] = table[i][w] ^ a.w_[w];
    }

    std::uint64_t acc[2 * kMaxWords] = {};
    for (std::size_t wi = 0; wi < nw; ++wi) {
        const std::uint64_t bw = b.w_[wi];
        if (!bw) continue;
        for (unsigned shift = 0; shift < 64; shift += 4) {
            const unsigned nib = (bw >> shift) & 0xF;
            if (nib) xor_shifted(acc, table[nib], nw, static_cast<unsigned>(wi * 64 + shift));
        }
    }

    fld.reduce(acc, 2 * kMaxWords);
    Element r(a.field());
    for (std::size_t w = 0; w < nw; ++w) r.w_[w] = acc[w];
    return r;
}

Element square(const Element& a) {
    // Coefficient spreading: bit i of a becomes bit 2i of the product.
    static const auto spread = [] {
        std::array<std::uint16_t, 256> t{};
        for (unsigned v = 0; v < 256; ++v) {
            std::uint16_t s = 0;
            for (unsigned i = 0; i < 8; ++i) {
                if (v >> i & 1) s |= std::uint16_t(1) << (2 * i);
            }
            t[v] = s;
        }
        return t;
    }();

    const Field& fld = a.field_ref();
    const std::size_t nw = fld.words();
    std::uint64_t acc[2 * kMaxWords] = {};
    for (std::size_t wi = 0; wi < nw; ++wi) {
        const std::uint64_t v = a.w_[wi];
        std::uint64_t lo = 0, hi = 0;
        for (unsigned byte = 0; byte < 4; ++byte)
            lo |= std::uint64_t{spread[(v >> (8 * byte)) & 0xFF]} << (16 * byte);
        for (unsigned byte = 4; byte < 8; ++byte)
            hi |= std::uint64_t{spread[(v >> (8 * byte)) & 0xFF]} << (16 * (byte - 4));
        acc[2 * wi] = lo;
        acc[2 * wi + 1] = hi;
    }
    fld.reduce(acc, 2 * kMaxWords);
    Element r(a.field());
    for (std::size_t w = 0; w < nw; ++w) r.w_[w] = acc[w];
    return r;
}

Element inverse(const Element& a) {
    if (a.is_zero()) throw DomainError("zero has no inverse");
    const Field& fld = a.field_ref();
    const unsigned m = fld.degree();

    // Extended Euclid over GF(2)[x] maintaining g1*a == u and g2*a == v
    // (mod f). f irreducible and a != 0 force gcd(a, f) = 1, so the loop
    // ends with u == 1 and g1 == a^-1. deg(g1), deg(g2) stay <= m.
    std::uint64_t u[kInvWords] = {}, v[kInvWords] = {};
    std::uint64_t g1[kInvWords] = {}, g2[kInvWords] = {};
    for (std::size_t i = 0; i < kMaxWords; ++i) u[i] = a.w_[i];
    for (unsigned e : fld.reduction().terms) v[e / 64] |= std::uint64_t{1} << (e % 64);
    g1[0] = 1;

    int du = poly_degree(u, kInvWords);
    int dv = static_cast<int>(m);
    while (du > 0) {
        int j = du - dv;
        if (j < 0) {
            std::swap_ranges(u, u + kInvWords, v);
            std::swap_ranges(g1, g1 + kInvWords, g2);
            std::swap(du, dv);
            j = -j;
        }
        xor_shifted_wide(u, v, static_cast<unsigned>(j));
        xor_shifted_wide(g1, g2, static_cast<unsigned>(j));
        du = poly_degree(u, kInvWords);
    }
    if (du < 0) throw DomainError("element not invertible");

    Element r(a.field());
    for (std::size_t w = 0; w < fld.words(); ++w) r.w_[w] = g1[w];
    return r;
}

}  // namespace ecike::gf2m
