// rng.hpp
//
// Injectable randomness: a deterministic ChaCha20-keystream generator for
// seeded simulation runs and tests, and a system-entropy source for live
// CLI use without --seed.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "ecike/bytes.hpp"

namespace ecike {

class Rng {
public:
    virtual ~Rng() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    Bytes bytes(std::size_t n);
    std::uint64_t next_u64();
};

// Keystream = ChaCha20 keyed with SHA-256(label ‖ seed). Distinct labels give
// independent streams from one scenario seed.
class DeterministicRng final : public Rng {
public:
    explicit DeterministicRng(std::uint64_t seed, std::string_view label = "");
    void fill(std::span<std::uint8_t> out) override;

private:
    Bytes key_;
    std::uint32_t counter_ = 0;
    std::size_t offset_ = 64;  // within current block
    std::array<std::uint8_t, 64> block_{};
};

class SystemRng final : public Rng {
public:
    void fill(std::span<std::uint8_t> out) override;
};

}  // namespace ecike
