#pragma once

#include <cstdint>

// SplitMix64 (Steele, Lea, Flood; the java.util.SplittableRandom finalizer).
// Small, fast, and fully determined by its 64-bit seed, so runs are
// reproducible byte-for-byte across platforms. Independent streams are
// derived from a master seed and a counter; running attempts in parallel
// with per-attempt streams reproduces the serial results.

namespace cubehd {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Low `bits` bits of one output; each bit is independently uniform.
    std::uint64_t next_bits(int bits) {
        std::uint64_t x = next();
        return bits >= 64 ? x : x & ((std::uint64_t{1} << bits) - 1);
    }

    /// Uniform in [0, 1).
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Stream `index` of master seed `seed`: seeds a fresh generator with a
/// mixed (seed, index) pair so distinct indices give unrelated streams.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed + 0x9E3779B97F4A7C15ull * (index + 1));
    return SplitMix64(mixer.next());
}

}  // namespace cubehd
