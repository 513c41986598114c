#pragma once

#include <cstdint>

namespace spanner {

// SplitMix64 with the published constants. One named generator with explicit
// integer seeding keeps every randomized run bit-reproducible across
// platforms; golden values in the test suite depend on this exact stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) via 128-bit multiply-shift; n = 0 yields 0.
  std::uint64_t bounded(std::uint64_t n) {
    if (n == 0) return 0;
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    bounded(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Bernoulli(p). The threshold p * 2^64 is a single double rounding, fixed
  // for a given p, so outcomes are platform-independent.
  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const double scaled = p * 18446744073709551616.0;  // p * 2^64
    return next() < static_cast<std::uint64_t>(scaled);
  }

  // Independent stream derived from this seed and a label.
  Rng fork(std::uint64_t label) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (label + 1)));
    child.next();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace spanner
