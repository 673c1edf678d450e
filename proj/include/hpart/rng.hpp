#pragma once

#include <cstdint>

namespace hpart {

// splitmix64 (Steele, Lea, Flood 2014). Chosen because it is trivially
// portable across languages: corpora regenerate bit-identically from the
// documented seeding rule (state = seed, one next() per draw).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // 53-bit uniform draw in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // uniform in [0, bound) by rejection-free modulo of the high bits;
  // bias is negligible for desk-scale bounds and keeps the rule simple.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace hpart
