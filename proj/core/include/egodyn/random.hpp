#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace egodyn {

/// Seeded random stream with portable derived distributions.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The bounded-integer and unit-interval draws are implemented
/// here rather than via <random> distributions, whose algorithms differ
/// between standard libraries; this keeps every simulated series
/// reproducible across toolchains.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t index(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for an independent substream identified by (tag, a, b) under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t a = 0,
                          std::uint64_t b = 0);

inline RandomStream substream(std::uint64_t master, std::string_view tag, std::uint64_t a = 0,
                              std::uint64_t b = 0) {
  return RandomStream(derive_seed(master, tag, a, b));
}

}  // namespace egodyn
