// bytes.hpp
//
// Octet-string helpers and the error hierarchy shared across the library.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecike {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand outside an operation's domain (field mismatch, off-curve point,
// zero inverse, bad configuration).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed wire octets or text input.
class ParseError : public Error {
public:
    using Error::Error;
};

// Authenticated decryption or key-derivation failure.
class CryptoError : public Error {
public:
    using Error::Error;
};

// Unknown curve name, group identifier, or registry key.
class LookupError : public Error {
public:
    using Error::Error;
};

// API called in the wrong protocol state.
class StateError : public Error {
public:
    using Error::Error;
};

// Uppercase hex, two digits per octet.
std::string to_hex(BytesView data);

// Accepts upper/lower case; whitespace is stripped. Throws ParseError on a
// non-hex character or odd digit count.
Bytes from_hex(std::string_view hex);

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

Bytes concat(std::initializer_list<BytesView> parts);

void append(Bytes& out, BytesView more);
void append_u16(Bytes& out, std::uint16_t v);
void append_u32(Bytes& out, std::uint32_t v);

// Big-endian reads; throw ParseError when the span is too short.
std::uint16_t read_u16(BytesView in, std::size_t offset);
std::uint32_t read_u32(BytesView in, std::size_t offset);

bool constant_eq(BytesView a, BytesView b);

}  // namespace ecike
