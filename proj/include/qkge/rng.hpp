#pragma once

#include <cstdint>
#include <random>

namespace qkge {

// Seed derivation (splitmix64 finalizer). Per-triple seeds are derived as
// mix_seed(global_seed, triple_index, epoch) so sampled results never depend
// on the order triples are scored in.
inline std::uint64_t mix_seed(std::uint64_t a) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return mix_seed(a ^ mix_seed(b));
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

// mt19937_64 wrapper that derives doubles and bounded indices directly from
// the raw 64-bit stream. <random> distributions are implementation-defined,
// so going through them would break the bit-for-bit reproducibility contract
// across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound). bound must be positive.
    std::size_t next_index(std::size_t bound) {
        std::size_t i = static_cast<std::size_t>(next_double() * static_cast<double>(bound));
        return i < bound ? i : bound - 1;
    }

    // Uniform angle in [-pi, pi).
    double next_angle() {
        constexpr double pi = 3.14159265358979323846;
        return (2.0 * next_double() - 1.0) * pi;
    }

    bool next_bernoulli(double p) { return next_double() < p; }

  private:
    std::mt19937_64 engine_;
};

} // namespace qkge
