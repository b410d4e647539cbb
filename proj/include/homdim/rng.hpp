#pragma once

/* SplitMix64: tiny, portable, deterministic generator.  Seeded runs must
 * reproduce byte-identical reports, so no std:: distributions here. */

#include <cstdint>

namespace homdim {

class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection; n > 0
    uint64_t below(uint64_t n) {
        uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    long long intIn(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // derive an independent stream, stable under call order
    static uint64_t mix(uint64_t seed, uint64_t salt) {
        Rng r(seed ^ (0x632be59bd9b4e019ull * (salt + 1)));
        return r.next();
    }

  private:
    uint64_t state_;
};

}  // namespace homdim
