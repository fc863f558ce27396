#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace smsmx {

// SplitMix64 finalizer. Bijective on 64-bit words; used for seed expansion
// and for deriving per-frame stream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256++ seeded through SplitMix64.
//
// The generator, its seeding, and the Gaussian sampler below are part of the
// reproducibility contract: a (master_seed, frame_index) pair identifies one
// stream via frame_stream(), and the draw sequence is identical regardless of
// platform, thread count, or scheduling. Do not change any of them without
// accepting that every recorded result changes too.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t z = seed;
        bool nonzero = false;
        for (auto& w : state_) {
            z = mix64(z);
            w = z;
            nonzero |= (w != 0);
        }
        if (!nonzero) state_[0] = 0x9e3779b97f4a7c15ull;
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // One CN(0,1) sample (circularly-symmetric complex Gaussian, unit
    // variance: 0.5 per real component). Box-Muller on exactly two uniform
    // draws; u1 is flipped into (0,1] so log() never sees zero.
    std::complex<double> next_cnormal() noexcept {
        const double u1 = 1.0 - next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-std::log(u1));  // -2ln(u1), then /sqrt(2)
        const double phi = 2.0 * kPi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

// Independent stream for one Monte Carlo frame. Derivation is pinned:
//   seed = mix64(mix64(master_seed) ^ (frame_index + 0x9e3779b97f4a7c15))
// so parallel workers reproduce the serial draw sequence frame by frame.
inline Rng frame_stream(std::uint64_t master_seed, std::uint64_t frame_index) noexcept {
    return Rng(mix64(mix64(master_seed) ^ (frame_index + 0x9e3779b97f4a7c15ull)));
}

}  // namespace smsmx
