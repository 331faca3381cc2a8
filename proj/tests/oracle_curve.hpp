// oracle_curve.hpp
//
// Test-only toy-curve machinery over GF(2^5), f = x^5 + x^2 + 1, curve
// y^2 + xy = x^3 + x^2 + 1. Field elements are 5-bit masks and all group
// operations are written from the affine formulas directly, independent of
// the library's code paths.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint8_t gf32_mul(std::uint8_t a, std::uint8_t b) {
    std::uint16_t x = a, r = 0;
    for (int i = 0; i < 5; ++i) {
        if (b >> i & 1) r ^= x << i;
    }
    for (int d = 9; d >= 5; --d) {
        if (r >> d & 1) r ^= (0b100101 << (d - 5));
    }
    return static_cast<std::uint8_t>(r);
}

inline std::uint8_t gf32_inv(std::uint8_t a) {
    // brute force: 31 nonzero elements
    for (std::uint8_t c = 1; c < 32; ++c) {
        if (gf32_mul(a, c) == 1) return c;
    }
    return 0;
}

struct ToyPoint {
    bool inf = true;
    std::uint8_t x = 0, y = 0;

    friend bool operator==(const ToyPoint&, const ToyPoint&) = default;
};

inline bool toy_on_curve(std::uint8_t x, std::uint8_t y) {
    // y^2 + xy == x^3 + x^2 + 1  (a = b = 1)
    const std::uint8_t lhs = gf32_mul(y, y) ^ gf32_mul(x, y);
    const std::uint8_t x2 = gf32_mul(x, x);
    const std::uint8_t rhs = gf32_mul(x2, x) ^ x2 ^ 1;
    return lhs == rhs;
}

inline ToyPoint toy_add(const ToyPoint& p, const ToyPoint& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x) {
        if (p.y != q.y) return {};               // q == -p
        if (p.x == 0) return {};                 // order-2 point
        const std::uint8_t lam = p.x ^ gf32_mul(p.y, gf32_inv(p.x));
        const std::uint8_t x3 = gf32_mul(lam, lam) ^ lam ^ 1;  // + a, a = 1
        const std::uint8_t y3 = gf32_mul(p.x, p.x) ^ gf32_mul(std::uint8_t(lam ^ 1), x3);
        return {false, x3, y3};
    }
    const std::uint8_t lam = gf32_mul(std::uint8_t(p.y ^ q.y), gf32_inv(std::uint8_t(p.x ^ q.x)));
    const std::uint8_t x3 = gf32_mul(lam, lam) ^ lam ^ p.x ^ q.x ^ 1;
    const std::uint8_t y3 = gf32_mul(lam, std::uint8_t(p.x ^ x3)) ^ x3 ^ p.y;
    return {false, x3, y3};
}

inline ToyPoint toy_scalar(unsigned k, ToyPoint p) {
    ToyPoint acc;
    for (; k; k >>= 1) {
        if (k & 1) acc = toy_add(acc, p);
        p = toy_add(p, p);
    }
    return acc;
}

inline std::vector<ToyPoint> toy_enumerate() {
    std::vector<ToyPoint> pts{ToyPoint{}};  // infinity first
    for (std::uint8_t x = 0; x < 32; ++x) {
        for (std::uint8_t y = 0; y < 32; ++y) {
            if (toy_on_curve(x, y)) pts.push_back({false, x, y});
        }
    }
    return pts;
}

}  // namespace oracle
