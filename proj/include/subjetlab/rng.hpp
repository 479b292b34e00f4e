#pragma once

#include <cstdint>

#include "subjetlab/rational.hpp"

namespace subjetlab {

// Deterministic splitmix64 generator. Seeded runs reproduce bit-for-bit on
// every platform, which the reporting layer relies on; substreams derived
// through stream() stay independent of draw order elsewhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in {0, ..., bound-1}; bound >= 1.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent substream; deterministic in (seed, id) only.
  Rng stream(std::uint64_t id) const {
    std::uint64_t z = seed_ ^ (0x9e3779b97f4a7c15ull * (id + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return Rng(z ^ (z >> 31));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

// Nonzero rational with numerator in [-1000,1000] and denominator in
// [1,100]; the distribution avoids zero so sampled data stays generic.
inline Rational sample_nonzero_rational(Rng& rng) {
  std::int64_t num = rng.range(1, 1000);
  if (rng.next() & 1) num = -num;
  std::int64_t den = rng.range(1, 100);
  return Rational(num, den);
}

}  // namespace subjetlab
