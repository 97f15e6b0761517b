// Seedable, splittable RNG.  Substreams are derived from a master seed and a
// stream index through splitmix64, so work partitioned by sample index gives
// identical results regardless of worker count.
#pragma once

#include <cstdint>

namespace thoma {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ (Blackman & Vigna), seeded via splitmix64.
class Rng {
  public:
    using result_type = uint64_t;
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }
    // Substream `index` of a master seed; distinct indexes decorrelate through
    // the splitmix64 avalanche.
    static Rng substream(uint64_t master, uint64_t index) {
        uint64_t sm = master;
        uint64_t base = splitmix64(sm);
        return Rng(base ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    }

    uint64_t operator()() {
        uint64_t r = rotl(s_[0] + s_[3], 23) + s_[0];
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return r;
    }

    static constexpr uint64_t min() { return 0; }
    static constexpr uint64_t max() { return ~0ULL; }

    double uniform() { return ((*this)() >> 11) * 0x1.0p-53; }  // [0,1)

    // uniform integer in [0, bound)
    uint64_t below(uint64_t bound) {
        // Lemire's multiply-shift rejection
        uint64_t x = (*this)();
        __uint128_t m = (__uint128_t)x * bound;
        uint64_t l = (uint64_t)m;
        if (l < bound) {
            uint64_t t = -bound % bound;
            while (l < t) {
                x = (*this)();
                m = (__uint128_t)x * bound;
                l = (uint64_t)m;
            }
        }
        return (uint64_t)(m >> 64);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

}  // namespace thoma
