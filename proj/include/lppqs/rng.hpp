#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace lppqs {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123). A block
/// of four 32-bit words is a pure function of (counter, key), so any draw can
/// be regenerated from its coordinates without shared state.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter generate(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Uniform draws addressed by (seed, stream, sample, square):
///   counter = (square, sample low, sample high, stream), key = (seed low, seed high).
/// Each draw uses the first two words of its block as a 53-bit mantissa.
class SquareStream {
 public:
  SquareStream(std::uint64_t seed, std::uint32_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream) {}

  /// Uniform on (0, 1].
  double uniform(std::uint64_t sample, std::uint32_t square) const noexcept {
    const auto block = Philox4x32::generate(
        {square, static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32), stream_}, key_);
    const std::uint64_t bits = ((std::uint64_t{block[0]} << 32) | block[1]) >> 11;
    return static_cast<double>(bits + 1) * 0x1.0p-53;
  }

 private:
  Philox4x32::Key key_;
  std::uint32_t stream_;
};

/// Geometric variable with P(X = k) = (1 - p) p^k from a uniform on (0, 1],
/// via floor(log(U) / log(p)); `log_p` is log(p) < 0.
inline int geometric_from_uniform(double uniform, double log_p) noexcept {
  if (uniform >= 1.0) return 0;
  return static_cast<int>(std::floor(std::log(uniform) / log_p));
}

}  // namespace lppqs
