// gf2m.hpp
//
// Arithmetic in the binary extension fields GF(2^m) used by the Koblitz
// curve registry: m in {163, 233, 283, 409, 571} plus a 5-bit toy field for
// exhaustive testing. Elements are polynomials over GF(2), fully reduced
// modulo the field's sparse reduction polynomial f(x).
//
// NOT constant-time. This is simulator-grade arithmetic for protocol
// experiments; it must never protect real traffic.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecike/bytes.hpp"

namespace ecike::gf2m {

enum class FieldId : std::uint8_t { K163, K233, K283, K409, K571, Toy5 };

// f(x) as its sorted exponent list, e.g. x^163+x^7+x^6+x^3+1 ->
// {163, 7, 6, 3, 0}. Strictly decreasing; front() == m; back() == 0.
struct ReductionPoly {
    unsigned degree;
    std::vector<unsigned> terms;
};

// Largest operand: degree-571 polynomials plus f itself (bit 571) fit in
// nine 64-bit words.
inline constexpr std::size_t kMaxWords = 9;

class Field {
public:
    static const Field& get(FieldId id);

    FieldId id() const { return id_; }
    unsigned degree() const { return m_; }
    const ReductionPoly& reduction() const { return poly_; }
    std::size_t words() const { return words_; }
    std::size_t byte_length() const { return (m_ + 7) / 8; }
    std::size_t hex_length() const { return (m_ + 3) / 4; }

    // Reduces a double-width polynomial in place modulo f(x).
    void reduce(std::uint64_t* acc, std::size_t acc_words) const;

private:
    Field(FieldId id, unsigned m, std::vector<unsigned> terms);

    FieldId id_;
    unsigned m_;
    ReductionPoly poly_;
    std::size_t words_;
    std::vector<unsigned> low_terms_;  // exponents of f below m, including 0
};

class Element {
public:
    static Element zero(FieldId f);
    static Element one(FieldId f);

    // Big-endian hex, at most ceil(m/4) digits after whitespace stripping;
    // the encoded value must already be reduced (degree < m).
    static Element from_hex(std::string_view hex, FieldId f);

    // Big-endian octets, at most ceil(m/8) of them, high bits zero.
    static Element from_bytes(BytesView in, FieldId f);

    // Uppercase, fixed width ceil(m/4).
    std::string to_hex() const;

    // Big-endian, fixed width ceil(m/8).
    Bytes to_bytes() const;

    FieldId field() const { return field_; }
    const Field& field_ref() const { return Field::get(field_); }
    bool is_zero() const;
    bool bit(unsigned i) const;

    friend bool operator==(const Element& a, const Element& b) = default;

    friend Element add(const Element& a, const Element& b);
    friend Element mul(const Element& a, const Element& b);
    friend Element square(const Element& a);
    friend Element inverse(const Element& a);

    friend Element operator+(const Element& a, const Element& b) { return add(a, b); }
    friend Element operator*(const Element& a, const Element& b) { return mul(a, b); }

private:
    explicit Element(FieldId f) : field_(f) {}

    FieldId field_;
    std::array<std::uint64_t, kMaxWords> w_{};
};

Element add(const Element& a, const Element& b);      // throws DomainError on field mismatch
Element mul(const Element& a, const Element& b);
Element square(const Element& a);
Element inverse(const Element& a);                    // throws DomainError on zero

}  // namespace ecike::gf2m
