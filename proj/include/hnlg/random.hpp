#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hnlg {

/// SplitMix64. Used instead of <random> distributions so seeded draws are
/// identical across standard library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n). n must be positive.
  std::size_t index(std::size_t n) noexcept {
    // Lemire's multiply-shift; bias is negligible for the n used here.
    return static_cast<std::size_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

 private:
  std::uint64_t state_;
};

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Per-record seed: base seed XOR hash(record id).
constexpr std::uint64_t record_seed(std::uint64_t seed, std::string_view record_id) noexcept {
  return seed ^ fnv1a64(record_id);
}

}  // namespace hnlg
