#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "reductlab/rational.hpp"

namespace reductlab {

/// Derives an independent stream seed from a base seed and an index
/// (splitmix64 finalizer).
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic seeded generator. All draws go through explicit helpers so
/// that results are identical across platforms and standard libraries
/// (std::mt19937_64 is fully specified; the distributions in <random> are
/// not, so they are avoided).
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Value in [0, bound); bound > 0. Plain modulo reduction: the tiny bias
  /// does not matter for instance generation, reproducibility does.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Value in [lo, hi], inclusive.
  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

/// Random canonical rational with |numerator| <= max_abs_numerator and
/// denominator in [1, max_denominator].
Rat random_rational(SeededRng& rng, std::int64_t max_abs_numerator,
                    std::int64_t max_denominator);

}  // namespace reductlab
