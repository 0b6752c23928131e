#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace tf {

// xoshiro256++ seeded through splitmix64. Self-contained so that streams are
// identical across platforms and serializable into checkpoint manifests
// (std::mt19937 state encoding is implementation-defined).
struct Rng {
    std::array<uint64_t, 4> s{};
    double spare     = 0.0;  // cached second Box-Muller sample
    bool have_spare  = false;

    Rng() : Rng(0x9e3779b97f4a7c15ULL) {}

    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : s) {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    // Independent child stream, e.g. one per eval prompt.
    Rng split(uint64_t key) const {
        uint64_t mix = s[0] ^ (s[1] * 0x9e3779b97f4a7c15ULL) ^ (key * 0xd1342543de82ef95ULL);
        return Rng(mix + key);
    }

    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t u64() {
        uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        uint64_t t      = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // uniform in [0, 1)
    double uniform() { return double(u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi] inclusive
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t span = uint64_t(hi - lo) + 1;
        // Lemire's bounded generation, rejection keeps it exactly uniform.
        uint64_t x = u64();
        __uint128_t m = (__uint128_t)x * span;
        uint64_t l = (uint64_t)m;
        if (l < span) {
            uint64_t floor = (-span) % span;
            while (l < floor) {
                x = u64();
                m = (__uint128_t)x * span;
                l = (uint64_t)m;
            }
        }
        return lo + int64_t(m >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    double normal() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double r  = std::sqrt(-2.0 * std::log(u1));
        double a  = 6.283185307179586476925286766559 * u2;
        spare      = r * std::sin(a);
        have_spare = true;
        return r * std::cos(a);
    }

    template <class T>
    void fill_normal(T* dst, size_t n, double stddev = 1.0) {
        for (size_t i = 0; i < n; ++i) dst[i] = T(normal() * stddev);
    }

    template <class T>
    void fill_normal(std::vector<T>& dst, double stddev = 1.0) {
        fill_normal(dst.data(), dst.size(), stddev);
    }

    std::vector<uint64_t> state() const {
        return {s[0], s[1], s[2], s[3],
                have_spare ? 1ULL : 0ULL,
                std::bit_cast<uint64_t>(spare)};
    }

    static Rng from_state(const std::vector<uint64_t>& st) {
        Rng r(0);
        if (st.size() >= 6) {
            r.s = {st[0], st[1], st[2], st[3]};
            r.have_spare = st[4] != 0;
            r.spare      = std::bit_cast<double>(st[5]);
        }
        return r;
    }
};

}  // namespace tf
