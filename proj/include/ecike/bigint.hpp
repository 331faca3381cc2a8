// bigint.hpp
//
// Unsigned big integers sized for curve orders up to 571 bits and their
// double-width products. Backs scalar arithmetic, signature math, and the
// Miller-Rabin primality checks on the registered group orders.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecike/bytes.hpp"

namespace ecike {

class Rng;

class BigUint {
public:
    BigUint() = default;  // zero

    static BigUint from_u64(std::uint64_t v);
    static BigUint from_hex(std::string_view hex);      // whitespace tolerated
    static BigUint from_bytes_be(BytesView in);

    std::string to_hex() const;                          // uppercase, minimal width
    Bytes to_bytes_be(std::size_t width) const;          // throws DomainError if too narrow

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1); }
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    std::uint64_t low_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b);  // throws DomainError on underflow
    friend BigUint operator*(const BigUint& a, const BigUint& b);
    friend BigUint operator<<(const BigUint& a, std::size_t bits);
    friend BigUint operator>>(const BigUint& a, std::size_t bits);

    // Quotient and remainder; throws DomainError on division by zero.
    static std::pair<BigUint, BigUint> divmod(const BigUint& num, const BigUint& den);
    friend BigUint operator/(const BigUint& a, const BigUint& b) { return divmod(a, b).first; }
    friend BigUint operator%(const BigUint& a, const BigUint& b) { return divmod(a, b).second; }

    static BigUint mod_mul(const BigUint& a, const BigUint& b, const BigUint& n);
    static BigUint mod_exp(BigUint base, const BigUint& exp, const BigUint& n);
    // Inverse modulo a prime via Fermat; callers guarantee primality.
    static BigUint mod_inv_prime(const BigUint& a, const BigUint& p);

    // Miller-Rabin with random bases drawn from rng.
    bool is_probable_prime(unsigned rounds, Rng& rng) const;

private:
    void trim();

    std::vector<std::uint64_t> limbs_;  // little-endian, no trailing zeros
};

}  // namespace ecike
