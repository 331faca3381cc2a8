#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ecike/gf2m.hpp"
#include "oracle_gf2m.hpp"
#include "test_util.hpp"

using namespace ecike;
using namespace ecike::gf2m;
using oracle::Poly;

namespace {

const std::vector<FieldId> kAllFields = {FieldId::K163, FieldId::K233, FieldId::K283,
                                         FieldId::K409, FieldId::K571, FieldId::Toy5};

Poly reduction_poly(FieldId f) {
    Poly p;
    for (unsigned e : Field::get(f).reduction().terms) {
        if (p.size() <= e) p.resize(e + 1, 0);
        p[e] = 1;
    }
    return p;
}

Poly to_oracle(const Element& e) {
    return oracle::poly_from_hex(e.to_hex());
}

}  // namespace

TEST_CASE("addition basics") {
    std::mt19937_64 rng(101);
    for (FieldId f : kAllFields) {
        const Element zero = Element::zero(f);
        for (int i = 0; i < 50; ++i) {
            const Element a = testutil::random_element(f, rng);
            CHECK(add(a, a) == zero);   // characteristic 2: self-inverse
            CHECK(add(a, zero) == a);   // additive identity
        }
    }
    // x^3+x plus x^2+x = x^3+x^2 in GF(2^163)
    const Element a = Element::from_hex("A", FieldId::K163);  // x^3+x
    const Element b = Element::from_hex("6", FieldId::K163);  // x^2+x
    CHECK(add(a, b) == Element::from_hex("C", FieldId::K163));
}

TEST_CASE("field mismatch is a domain error") {
    const Element a = Element::one(FieldId::K163);
    const Element b = Element::one(FieldId::K233);
    CHECK_THROWS_AS(add(a, b), DomainError);
    CHECK_THROWS_AS(mul(a, b), DomainError);
}

TEST_CASE("multiplicative identity and the K-163 wraparound") {
    std::mt19937_64 rng(102);
    for (FieldId f : kAllFields) {
        const Element one = Element::one(f);
        for (int i = 0; i < 20; ++i) {
            const Element a = testutil::random_element(f, rng);
            CHECK(mul(a, one) == a);
        }
    }
    // x^162 * x = x^163 == x^7+x^6+x^3+1 mod f  (the low terms of f)
    std::string x162(41, '0');
    x162[0] = '4';  // bit 162
    const Element a = Element::from_hex(x162, FieldId::K163);
    const Element x = Element::from_hex("2", FieldId::K163);
    CHECK(mul(a, x) == Element::from_hex("C9", FieldId::K163));
}

TEST_CASE("fe_mul matches the schoolbook oracle on 1000 pairs per field") {
    for (FieldId f : kAllFields) {
        std::mt19937_64 rng(103 + static_cast<int>(f));
        const Poly fpoly = reduction_poly(f);
        const std::size_t hex_len = Field::get(f).hex_length();
        for (int i = 0; i < 1000; ++i) {
            const Element a = testutil::random_element(f, rng);
            const Element b = testutil::random_element(f, rng);
            const Poly expect = oracle::poly_mod(oracle::poly_mul(to_oracle(a), to_oracle(b)), fpoly);
            REQUIRE(mul(a, b).to_hex() == oracle::poly_to_hex(expect, hex_len));
        }
    }
}

TEST_CASE("distributivity, associativity, commutativity: 1000 cases per field") {
    for (FieldId f : kAllFields) {
        std::mt19937_64 rng(104 + static_cast<int>(f));
        for (int i = 0; i < 1000; ++i) {
            const Element a = testutil::random_element(f, rng);
            const Element b = testutil::random_element(f, rng);
            const Element c = testutil::random_element(f, rng);
            REQUIRE(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
            REQUIRE(add(add(a, b), c) == add(a, add(b, c)));
            REQUIRE(add(a, b) == add(b, a));
            REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
            REQUIRE(mul(a, b) == mul(b, a));
        }
    }
}

TEST_CASE("squaring agrees with self-multiplication; Frobenius is additive") {
    CHECK(square(Element::zero(FieldId::K233)) == Element::zero(FieldId::K233));
    CHECK(square(Element::one(FieldId::K233)) == Element::one(FieldId::K233));
    for (FieldId f : kAllFields) {
        std::mt19937_64 rng(105 + static_cast<int>(f));
        for (int i = 0; i < 200; ++i) {
            const Element a = testutil::random_element(f, rng);
            const Element b = testutil::random_element(f, rng);
            REQUIRE(square(a) == mul(a, a));
            REQUIRE(square(add(a, b)) == add(square(a), square(b)));
        }
    }
}

TEST_CASE("inversion roundtrip across all fields; zero is not invertible") {
    for (FieldId f : kAllFields) {
        std::mt19937_64 rng(106 + static_cast<int>(f));
        const Element one = Element::one(f);
        CHECK(inverse(one) == one);
        CHECK_THROWS_AS(inverse(Element::zero(f)), DomainError);
        for (int i = 0; i < 200; ++i) {
            const Element a = testutil::random_element(f, rng);
            if (a.is_zero()) continue;
            REQUIRE(mul(a, inverse(a)) == one);
        }
    }
}

TEST_CASE("hex codec") {
    CHECK(Element::from_hex("00", FieldId::K163).is_zero());
    CHECK(Element::from_hex("01", FieldId::K163) == Element::one(FieldId::K163));
    // canonicalization: case and padding normalize on output
    const Element a = Element::from_hex("aB c", FieldId::K163);
    CHECK(a.to_hex() == std::string(38, '0') + "ABC");
    CHECK(Element::from_hex(a.to_hex(), FieldId::K163) == a);

    CHECK_THROWS_AS(Element::from_hex("0g", FieldId::K163), ParseError);
    CHECK_THROWS_AS(Element::from_hex(std::string(42, 'F'), FieldId::K163), ParseError);
    // within length but degree >= m
    CHECK_THROWS_AS(Element::from_hex(std::string(41, 'F'), FieldId::K163), ParseError);

    std::mt19937_64 rng(107);
    for (FieldId f : kAllFields) {
        for (int i = 0; i < 50; ++i) {
            const Element a = testutil::random_element(f, rng);
            REQUIRE(Element::from_hex(a.to_hex(), f) == a);
            const Bytes b = a.to_bytes();
            REQUIRE(Element::from_bytes(b, f) == a);
            REQUIRE(b.size() == Field::get(f).byte_length());
        }
    }
}
