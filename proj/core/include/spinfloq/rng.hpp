// rng.hpp — reproducible random numbers. mt19937_64 gives bit-identical
// streams across platforms; the Gaussian transform avoids
// std::normal_distribution, whose output is implementation-defined.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace spinfloq {

inline constexpr const char* rng_identity_string = "mt19937_64+box-muller/v1";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// substream seed for (seed, index) pairs
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

class GaussianSampler {
  public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

    // uniform in (0, 1), 53-bit mantissa from the top engine bits
    double uniform() {
        const std::uint64_t bits = engine_() >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; one value per call, no caching so the
    // stream position stays a pure function of the call count
    double normal() {
        const double u = uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace spinfloq
