#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ecike/bigint.hpp"
#include "ecike/rng.hpp"

using namespace ecike;

namespace {

BigUint random_big(std::size_t max_bits, std::mt19937_64& rng) {
    const std::size_t bits = rng() % max_bits + 1;
    Bytes raw((bits + 7) / 8);
    for (auto& b : raw) b = static_cast<std::uint8_t>(rng());
    if (!raw.empty()) {
        const unsigned keep = bits % 8 == 0 ? 8 : bits % 8;
        raw[0] &= static_cast<std::uint8_t>(0xFF >> (8 - keep));
    }
    return BigUint::from_bytes_be(raw);
}

// Bitwise long division, independent of the limb-based divmod.
std::pair<BigUint, BigUint> divmod_oracle(const BigUint& num, const BigUint& den) {
    BigUint q, r;
    for (std::size_t i = num.bit_length(); i-- > 0;) {
        r = r << 1;
        if (num.bit(i)) r = r + BigUint::from_u64(1);
        if (r >= den) {
            r = r - den;
            q = q + (BigUint::from_u64(1) << i);
        }
    }
    return {q, r};
}

}  // namespace

TEST_CASE("hex and byte codecs") {
    CHECK(BigUint{}.to_hex() == "0");
    CHECK(BigUint::from_hex("0") == BigUint{});
    CHECK(BigUint::from_hex("  DE AD BE EF ").to_hex() == "DEADBEEF");
    CHECK(BigUint::from_u64(0x1234).to_bytes_be(4) == Bytes{0x00, 0x00, 0x12, 0x34});
    CHECK_THROWS_AS(BigUint::from_hex("10000").to_bytes_be(2), DomainError);

    std::mt19937_64 rng(201);
    for (int i = 0; i < 200; ++i) {
        const BigUint a = random_big(600, rng);
        CHECK(BigUint::from_hex(a.to_hex()) == a);
    }
}

TEST_CASE("addition and subtraction are inverse") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 500; ++i) {
        const BigUint a = random_big(640, rng);
        const BigUint b = random_big(640, rng);
        const BigUint sum = a + b;
        CHECK(sum - a == b);
        CHECK(sum - b == a);
        CHECK(sum >= a);
    }
    CHECK_THROWS_AS(BigUint::from_u64(1) - BigUint::from_u64(2), DomainError);
}

TEST_CASE("divmod agrees with bitwise long division") {
    std::mt19937_64 rng(203);
    CHECK_THROWS_AS(BigUint::divmod(BigUint::from_u64(1), BigUint{}), DomainError);
    for (int i = 0; i < 300; ++i) {
        const BigUint num = random_big(1200, rng);
        BigUint den = random_big(i % 3 == 0 ? 64 : 600, rng);
        if (den.is_zero()) den = BigUint::from_u64(7);
        const auto [q, r] = BigUint::divmod(num, den);
        const auto [qq, rr] = divmod_oracle(num, den);
        REQUIRE(q == qq);
        REQUIRE(r == rr);
        REQUIRE(q * den + r == num);
        REQUIRE(r < den);
    }
}

TEST_CASE("multiplication and shifts") {
    std::mt19937_64 rng(204);
    for (int i = 0; i < 300; ++i) {
        const BigUint a = random_big(600, rng);
        const std::size_t s = rng() % 130;
        REQUIRE((a << s) >> s == a);
        REQUIRE(a * BigUint::from_u64(2) == a << 1);
        const BigUint b = random_big(600, rng);
        REQUIRE(a * b == b * a);
    }
}

TEST_CASE("modular exponentiation basics") {
    const BigUint n = BigUint::from_u64(1000003);  // prime
    const BigUint a = BigUint::from_u64(123456);
    // Fermat: a^(n-1) == 1 mod n
    CHECK(BigUint::mod_exp(a, n - BigUint::from_u64(1), n) == BigUint::from_u64(1));
    CHECK(BigUint::mod_mul(a, BigUint::mod_inv_prime(a, n), n) == BigUint::from_u64(1));
    CHECK_THROWS_AS(BigUint::mod_inv_prime(BigUint{}, n), DomainError);
}

TEST_CASE("Miller-Rabin separates primes from composites") {
    DeterministicRng rng(42, "miller-rabin-test");
    const std::vector<std::uint64_t> primes = {2, 3, 5, 65537, 2147483647ULL};
    for (auto p : primes) CHECK(BigUint::from_u64(p).is_probable_prime(32, rng));

    // 2^61 - 1 is a Mersenne prime
    CHECK((BigUint::from_u64(1) << 61) - BigUint::from_u64(1) == BigUint::from_hex("1FFFFFFFFFFFFFFF"));
    CHECK(BigUint::from_hex("1FFFFFFFFFFFFFFF").is_probable_prime(32, rng));

    const std::vector<std::uint64_t> composites = {1, 4, 561, 1729, 25326001, 3215031751ULL};
    for (auto c : composites) CHECK_FALSE(BigUint::from_u64(c).is_probable_prime(32, rng));

    // product of two primes
    const BigUint semiprime = BigUint::from_u64(65537) * BigUint::from_u64(2147483647ULL);
    CHECK_FALSE(semiprime.is_probable_prime(32, rng));
}
