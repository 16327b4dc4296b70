#ifndef MINLAT_RNG_HPP
#define MINLAT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace minlat {

/// Deterministic random source. All draws are derived from mt19937_64
/// output directly (not via std:: distributions, whose algorithms are
/// implementation-defined), so sequences are reproducible across builds.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Strictly positive uniform draw on (0, hi); zero draws are rejected.
    double uniform_positive(double hi) {
        double v;
        do {
            v = next_double() * hi;
        } while (v <= 0.0);
        return v;
    }

    /// Exponential with the given rate; always strictly positive.
    double exponential(double rate) {
        if (rate <= 0.0)
            throw std::invalid_argument("exponential: rate must be positive");
        double v;
        do {
            v = next_double();
        } while (v <= 0.0);
        return -std::log(v) / rate;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    /// Independent stream for a named concern, so e.g. the contact process
    /// is unaffected by how many workload draws happen.
    static Rng derive(std::uint64_t seed, std::uint64_t salt) {
        return Rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (salt + 1)));
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace minlat

#endif
