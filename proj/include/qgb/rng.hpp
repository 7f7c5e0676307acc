#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace qgb {

// All randomness in the project flows through this generator. Seeds are
// derived with mix() so that every consumer (splits, fixed projections,
// weight init, batch shuffling, dropout) reads an independent, reproducible
// stream. Constants are the SplitMix64 ones:
//   state += 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^= z >> 31
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Box-Muller over next_double(); the second deviate is cached.
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  double next_gaussian(double mean, double variance) {
    return mean + std::sqrt(variance) * next_gaussian();
  }

  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  // Fisher-Yates, descending index.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

namespace detail {
inline uint64_t splitmix_finalize(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Stream derivation: mix(seed, k) seeds the k-th substream of `seed`.
inline uint64_t mix(uint64_t seed, uint64_t stream) {
  return detail::splitmix_finalize(seed * 0x9E3779B97F4A7C15ULL + stream + 1);
}

// String-tagged streams ("fixed-proj", "dropout", "init:<name>", ...) hash
// the tag with FNV-1a before mixing.
inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline uint64_t mix(uint64_t seed, std::string_view tag) { return mix(seed, fnv1a(tag)); }

}  // namespace qgb
