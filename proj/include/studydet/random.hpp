#pragma once

// Seeded pseudo-random draws for the property suites.
//
// Generator: std::mt19937_64. Each trial gets its own engine, seeded with
// splitmix64(master ^ fnv1a(suite) ^ splitmix64(trial)). Integers are drawn
// as (next() % 7) - 3, so coefficients are uniform on {-3, ..., 3} and the
// stream is identical on every platform.

#include <cstdint>
#include <random>
#include <vector>
#include <string_view>

#include "studydet/rational.hpp"

namespace studydet {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static Rng for_trial(std::uint64_t master, std::string_view suite, std::uint64_t trial) {
    return Rng(master ^ fnv1a(suite) ^ splitmix64(trial));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform on {0, ..., n-1}; n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  /// Uniform on {lo, ..., hi}.
  long between(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// Uniform on {-3, ..., 3}.
  long small() { return between(-3, 3); }

  Rational small_rational() { return Rational(small()); }

  bool coin() { return (next() & 1U) != 0; }

  /// Uniform permutation of {0, ..., n-1} by Fisher-Yates on below().
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace studydet
