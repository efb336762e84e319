#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "enspec/numeric.hpp"

namespace enspec {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Deterministic random stream. Every draw goes through mt19937_64 raw
/// output, so sequences are identical across platforms and standard-library
/// versions (std::uniform_real_distribution makes no such promise).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t integer(std::uint64_t bound) {
    if (bound == 0) throw validation_error("Rng::integer: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = eng_();
    } while (draw >= limit);
    return draw % bound;
  }

  bool coin() { return (eng_() & 1ULL) != 0; }

  /// Independent substream derived from this stream's seed.
  Rng fork(std::uint64_t stream) const {
    return Rng(detail::splitmix64(seed_ ^ (0xa5a5a5a5a5a5a5a5ULL + stream)));
  }

  /// Draw an index from a normalized weight vector by CDF inversion.
  std::size_t sample_index(const std::vector<double>& weights) {
    const double u = uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  template <typename It>
  void shuffle(It first, It last) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      std::swap(first[i - 1], first[integer(i)]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace enspec
