// SPDX-License-Identifier: Apache-2.0
#ifndef SCHATTEN_PRNG_HPP
#define SCHATTEN_PRNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace schatten {

// Deterministic 64-bit generator used everywhere randomness is needed.
// The exact algorithm is pinned so that runs are reproducible from seeds
// alone and cross-language ports can replay experiments:
//
//   state <- state + 0x9E3779B97F4A7C15
//   z <- state; z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
//
// Uniform doubles take the top 53 bits; Gaussians use Box-Muller on a
// (0,1] x [0,1) pair. No other entropy source is consulted.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard normal, Box-Muller; draws exactly two uniforms
    double next_gaussian() {
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // complex Gaussian with E|z|^2 = 1 (real and imaginary parts N(0, 1/2))
    std::complex<double> next_complex_gaussian() {
        double re = next_gaussian();
        double im = next_gaussian();
        return {re * M_SQRT1_2, im * M_SQRT1_2};
    }

private:
    std::uint64_t state_;
};

// Derives an independent child seed from a parent seed and an index.
// Used to split one root seed across trials/cells/starts so results do
// not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
    SplitMix64 g(parent ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
    return g.next_u64();
}

} // namespace schatten

#endif
