#pragma once

#include <cstdint>

namespace multivend {

// Deterministic random numbers for every Monte Carlo operation.
//
// The generator and the stream-derivation rule are pinned so that results
// reproduce bit-for-bit across runs, platforms and reimplementations:
//
//   finalize(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//                z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
//   next_u64():  state += 0x9E3779B97F4A7C15; return finalize(state)
//   next_unit(): (next_u64() >> 11) * 2^-53, uniform on [0, 1)
//
//   derive_stream(master, a, b) =
//       finalize(finalize(finalize(master + 0x9E3779B97F4A7C15) ^ a) ^ b)
//
// Each unit of Monte Carlo work gets its own stream: (trial, period) for
// horizon simulation, (trial, 0) for payoff studies, (trial, vendor) for
// vendor price draws. Appending trials or vendors never perturbs the draws
// of existing ones.

inline constexpr std::uint64_t kSeedGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix_bits(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a,
                                      std::uint64_t b) {
    return mix_bits(mix_bits(mix_bits(master + kSeedGamma) ^ a) ^ b);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kSeedGamma;
        return mix_bits(state_);
    }

    // Uniform on [0, 1); 53 mantissa bits, never returns 1.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace multivend
