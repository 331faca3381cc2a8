// sha256.hpp
//
// SHA-256 (FIPS 180-4). Simulator-grade: portable, not hardened against
// side channels.

#pragma once

#include <array>
#include <cstdint>

#include "ecike/bytes.hpp"

namespace ecike {

class Sha256 {
public:
    static constexpr std::size_t kDigestLen = 32;
    static constexpr std::size_t kBlockLen = 64;

    Sha256();
    void update(BytesView data);
    Bytes finish();

    static Bytes digest(BytesView data);

private:
    void process_block(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_;
    std::array<std::uint8_t, kBlockLen> buffer_;
    std::size_t buffered_ = 0;
    std::uint64_t total_ = 0;
};

Bytes hmac_sha256(BytesView key, BytesView msg);

}  // namespace ecike
