#pragma once
#include <cstdint>

namespace dats {

// splitmix64 finalizer; full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based uniform stream: output i is mix64(key + i*golden). The state
// is just (key, counter), so sequences are reproducible across platforms and
// independent streams come from distinct keys.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) noexcept : key_(key) {}

  // Independent stream keyed by (seed, role).
  static RngStream derive(std::uint64_t seed, std::uint64_t role) noexcept {
    return RngStream(mix64(mix64(seed + kGolden) ^ (role + kGolden)));
  }

  std::uint64_t next_u64() noexcept { return mix64(key_ + ++count_ * kGolden); }

  // Uniform strictly inside (0, 1): 53-bit mantissa, offset by half an ulp.
  double next_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via inverse-CDF transform of next_uniform().
  double next_normal() noexcept;

  std::uint64_t draws() const noexcept { return count_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  std::uint64_t key_;
  std::uint64_t count_ = 0;
};

// Standard normal CDF. Relative accuracy follows erfc (~1e-14) even for
// results near the underflow threshold, which the elimination rule relies on.
double normal_cdf(double x) noexcept;

// Inverse standard normal CDF for p in (0, 1) (Wichura's PPND16 rational
// approximations, ~1e-15 relative error). Throws InvalidInput outside (0, 1).
double normal_inv_cdf(double p);

}  // namespace dats
