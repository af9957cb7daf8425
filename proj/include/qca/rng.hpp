#pragma once

// Seeded RNG with a fixed algorithm (splitmix64 -> xoshiro256**) so that
// experiment reports are byte-identical across platforms and standard
// library versions.  All randomness in the library flows through this.

#include <cstdint>
#include <cmath>
#include <complex>

namespace qca {

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        // splitmix64 state expansion
        std::uint64_t x = seed;
        for (auto& si : s_) {
            x += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            si = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t lim = ~0ull - (~0ull % n);
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    // uniform in [0, 1) with 53 bits
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bit() { return (next() >> 63) != 0; }

    // standard normal, Box-Muller with a cached spare
    double gauss() {
        if (has_spare_) { has_spare_ = false; return spare_; }
        double u1, u2;
        do { u1 = real(); } while (u1 <= 1e-300);
        u2 = real();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    std::complex<double> cgauss() { return {gauss(), gauss()}; }

    // derive an independent stream (for per-experiment seeding)
    Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ull)); }

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace qca
