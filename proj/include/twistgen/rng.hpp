#ifndef TWISTGEN_RNG_HPP
#define TWISTGEN_RNG_HPP

#include <cstdint>
#include <random>

namespace twistgen {

/// Seeded deterministic RNG. mt19937_64 output is pinned by the
/// standard, and the bounded draw below avoids the implementation-defined
/// std::uniform_int_distribution, so identical seeds give identical
/// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [lo, hi] (modulo draw; bias is negligible for the
  /// window sizes used here and determinism is what matters).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % range);
  }

  bool coin() { return (gen_() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace twistgen

#endif
