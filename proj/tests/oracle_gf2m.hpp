// oracle_gf2m.hpp
//
// Test-only schoolbook GF(2)[x] arithmetic, deliberately independent of the
// library's word-packed implementation: polynomials are plain bit vectors
// (index = exponent) and reduction is textbook long division.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint8_t>;  // 0/1 per exponent, lowest first

inline int poly_deg(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i]) return static_cast<int>(i);
    }
    return -1;
}

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly poly_add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
    return poly_trim(std::move(a));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (poly_deg(a) < 0 || poly_deg(b) < 0) return {};
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= (b[j] & 1);
    }
    return poly_trim(std::move(r));
}

inline Poly poly_mod(Poly a, const Poly& f) {
    const int df = poly_deg(f);
    for (int da = poly_deg(a); da >= df; da = poly_deg(a)) {
        const int shift = da - df;
        for (int i = 0; i <= df; ++i) a[i + shift] ^= f[i];
    }
    return poly_trim(std::move(a));
}

inline Poly poly_from_exponents(std::initializer_list<unsigned> exps) {
    Poly p;
    for (unsigned e : exps) {
        if (p.size() <= e) p.resize(e + 1, 0);
        p[e] ^= 1;
    }
    return p;
}

inline Poly poly_from_hex(const std::string& hex) {
    Poly p;
    const auto digit = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const int v = digit(hex[hex.size() - 1 - i]);
        for (int bit = 0; bit < 4; ++bit) {
            if (v >> bit & 1) {
                const std::size_t e = 4 * i + bit;
                if (p.size() <= e) p.resize(e + 1, 0);
                p[e] = 1;
            }
        }
    }
    return p;
}

inline std::string poly_to_hex(const Poly& p, std::size_t hex_digits) {
    std::string out(hex_digits, '0');
    static const char* digits = "0123456789ABCDEF";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i]) continue;
        const std::size_t d = i / 4;
        if (d >= hex_digits) continue;
        const std::size_t pos = hex_digits - 1 - d;
        const int cur = (out[pos] >= 'A') ? out[pos] - 'A' + 10 : out[pos] - '0';
        out[pos] = digits[cur ^ (1 << (i % 4))];
    }
    return out;
}

}  // namespace oracle
