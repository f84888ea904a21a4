#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace imss {

/// splitmix64 step; used both as a standalone mixer and to derive substream
/// seeds from a base seed plus stream coordinates.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic per-(seed, coordinates) substream seed. Mixing each
/// coordinate through splitmix64 keeps nearby coordinates decorrelated.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base ^ 0xD1B54A32D192ED03ULL);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ (b + 0x8CB92BA72F3D8DD7ULL));
    s = splitmix64(s ^ (c + 0x2545F4914F6CDD1DULL));
    return s;
}

/// Small self-contained PRNG (xoshiro-free, splitmix64-based counter stream).
/// The standard <random> distributions are implementation-defined in the
/// exact value sequence they produce; sampling is hand-rolled here so that a
/// given seed yields the same stream on every platform and toolchain.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double next_double_open() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection-free modulo bias is negligible for n << 2^64, but use
        // Lemire's multiply-shift to stay exact anyway.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Standard normal via Box-Muller. Both outputs of the transform are
    /// consumed in order, so the stream position is a pure function of the
    /// number of calls.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double_open();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace imss
