#include "ecike/rng.hpp"

#include <array>
#include <random>

#include "ecike/aead.hpp"
#include "ecike/sha256.hpp"

namespace ecike {

Bytes Rng::bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
}

std::uint64_t Rng::next_u64() {
    std::array<std::uint8_t, 8> raw;
    fill(raw);
    std::uint64_t v = 0;
    for (auto b : raw) v = v << 8 | b;
    return v;
}

DeterministicRng::DeterministicRng(std::uint64_t seed, std::string_view label) {
    Sha256 h;
    h.update(to_bytes("ecike-drbg/"));
    h.update(to_bytes(label));
    std::array<std::uint8_t, 8> seed_be;
    for (int i = 0; i < 8; ++i) seed_be[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
    h.update(seed_be);
    key_ = h.finish();
}

void DeterministicRng::fill(std::span<std::uint8_t> out) {
    static constexpr std::uint8_t nonce[12] = {};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (offset_ == 64) {
            block_ = chacha20_block(key_, counter_++, {nonce, sizeof nonce});
            offset_ = 0;
        }
        out[i] = block_[offset_++];
    }
}

void SystemRng::fill(std::span<std::uint8_t> out) {
    static thread_local std::random_device dev;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(dev());
    }
}

}  // namespace ecike
