#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace linopt {

// Stateless 64-bit mix (SplitMix64 finalizer). Value k of stream `seed` is
// mix64(seed, k), so any position can be generated without stepping through
// the ones before it and sub-streams can be derived by nesting.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based generator: a seed plus a position. Identical (seed, counter)
// pairs produce identical output on every platform.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    std::uint64_t next() { return mix64(seed_, counter_++); }

    // Uniform integer in [0, bound) by modular reduction with rejection of
    // the biased tail, so every residue is exactly equally likely.
    std::uint64_t next_below(std::uint64_t bound) {
        // 2^64 mod bound
        std::uint64_t excess = (0xFFFFFFFFFFFFFFFFull % bound) + 1;
        if (excess == bound) excess = 0;
        std::uint64_t limit = 0xFFFFFFFFFFFFFFFFull - excess;
        std::uint64_t x = next();
        while (x > limit) x = next();
        return x % bound;
    }

    // Uniform double in (0, 1]; never returns 0 so it is safe under log().
    double next_unit() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // Standard complex Gaussian with E|z|^2 = 1 (rotationally invariant).
    std::complex<double> next_complex_gaussian() {
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-std::log(u1));
        double phi = 2.0 * std::numbers::pi_v<double> * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace linopt
