#ifndef HIDESEEK_RANDOM_HPP_
#define HIDESEEK_RANDOM_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace hideseek {

/// SplitMix64 finalizer. Fixed and platform independent, so every hash and
/// derived seed in the library is reproducible bit for bit.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds one word into a running 64-bit digest.
constexpr std::uint64_t hash_combine(std::uint64_t digest, std::uint64_t word) noexcept {
  return splitmix64(digest ^ splitmix64(word));
}

constexpr std::uint64_t hash_label(std::string_view label) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Domain-separated child seed: distinct (label, indices) give independent streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                 std::initializer_list<std::uint64_t> indices = {}) noexcept {
  std::uint64_t h = hash_combine(splitmix64(master), hash_label(label));
  for (std::uint64_t i : indices) h = hash_combine(h, i);
  return h;
}

/// Maps a 64-bit word onto {0, ..., count-1} (multiply-shift).
inline std::uint64_t scale_to_range(std::uint64_t word, std::uint64_t count) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(word) * count) >> 64);
}

/// Seeded generator. Only the raw mt19937_64 stream is used (its output is
/// fixed by the standard); distributions are implemented here so results do
/// not depend on the standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer on {0, ..., count-1}; exact via rejection.
  std::uint64_t below(std::uint64_t count) {
    const std::uint64_t threshold = (0 - count) % count;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % count;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// ceil() that ignores floating round-off just above an integer, e.g.
/// 11/0.02 - 1 evaluating to 549.0000000000001.
inline double ceil_tolerant(double x, double rel = 1e-9) {
  const double r = std::round(x);
  if (std::abs(x - r) <= rel * std::max(1.0, std::abs(x))) return r;
  return std::ceil(x);
}

}  // namespace hideseek

#endif  // HIDESEEK_RANDOM_HPP_
