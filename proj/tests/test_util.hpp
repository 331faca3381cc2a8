// test_util.hpp
//
// Shared helpers for the unit suites: deterministic random field elements
// and scalars driven by std::mt19937_64 (kept separate from the library's
// own DRBG so tests do not depend on what they check).

#pragma once

#include <random>
#include <string>

#include "ecike/bigint.hpp"
#include "ecike/curve.hpp"
#include "ecike/gf2m.hpp"

namespace testutil {

inline std::string random_element_hex(ecike::gf2m::FieldId f, std::mt19937_64& rng) {
    using ecike::gf2m::Field;
    const Field& fld = Field::get(f);
    const unsigned m = fld.degree();
    static const char* digits = "0123456789ABCDEF";
    std::string hex(fld.hex_length(), '0');
    for (std::size_t i = 0; i < hex.size(); ++i) hex[i] = digits[rng() & 0xF];
    // clear bits at or above m in the leading digit
    const unsigned lead_bits = m % 4 == 0 ? 4 : m % 4;
    const int lead = (hex[0] >= 'A' ? hex[0] - 'A' + 10 : hex[0] - '0') & ((1 << lead_bits) - 1);
    hex[0] = digits[lead];
    return hex;
}

inline ecike::gf2m::Element random_element(ecike::gf2m::FieldId f, std::mt19937_64& rng) {
    return ecike::gf2m::Element::from_hex(random_element_hex(f, rng), f);
}

inline ecike::BigUint random_scalar(const ecike::BigUint& bound, std::mt19937_64& rng) {
    // uniform enough for tests: random bytes reduced mod bound
    const std::size_t width = (bound.bit_length() + 7) / 8 + 2;
    ecike::Bytes raw(width);
    for (auto& b : raw) b = static_cast<std::uint8_t>(rng());
    return ecike::BigUint::from_bytes_be(raw) % bound;
}

inline ecike::Bytes random_bytes(std::size_t n, std::mt19937_64& rng) {
    ecike::Bytes out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}

inline const std::vector<ecike::gf2m::FieldId>& production_fields() {
    using ecike::gf2m::FieldId;
    static const std::vector<FieldId> fields = {FieldId::K163, FieldId::K233, FieldId::K283,
                                                FieldId::K409, FieldId::K571};
    return fields;
}

}  // namespace testutil
