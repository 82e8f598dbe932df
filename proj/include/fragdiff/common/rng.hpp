#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace fragdiff {

// splitmix64 step; used to derive independent stream seeds from a base seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for the idx-th derived stream of `base`. Two mixing rounds keep
// low-entropy (seed, idx) pairs apart.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t idx) {
    return splitmix64(splitmix64(base) ^ splitmix64(idx + 0x632be59bd9b4e019ULL));
}

// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by
// the standard; the distribution helpers below are hand-rolled because the
// std::*_distribution classes are implementation-defined and would break
// cross-toolchain reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). n must be >= 1.
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(next_double() * static_cast<double>(n)) % n;
    }

    // Standard normal via Box-Muller (deterministic, no cached spare).
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    // Draw an index from an unnormalized non-negative weight vector.
    std::size_t next_categorical(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double u = next_double() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace fragdiff
