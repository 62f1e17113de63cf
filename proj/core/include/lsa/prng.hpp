#pragma once

#include <cstdint>

namespace lsa {

/// splitmix64: tiny deterministic generator, identical on every platform.
/// Standard-library distributions are implementation-defined, so seeded
/// reproducibility (charseq trials, sampled parameter grids) goes through
/// this instead.
class Prng {
  public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

  private:
    uint64_t state_;
};

}  // namespace lsa
