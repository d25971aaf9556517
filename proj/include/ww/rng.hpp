#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace ww {

// SplitMix64 stream. Small, fast, and fully specified, so runs are
// bit-reproducible regardless of platform or standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// Counter-based substream derivation: hash(master, index). Lets independent
// work items (restarts, samples) draw from disjoint streams no matter how
// they are scheduled across workers.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_.next(); }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }

    int sign() { return (gen_.next() >> 63) ? 1 : -1; }

    // Box-Muller pair of standard normals.
    std::pair<double, double> normal2() {
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    SplitMix64 gen_;
};

} // namespace ww
