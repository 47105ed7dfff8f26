#pragma once

// Counter-based generator: every draw is splitmix64 of (seed, stream, counter),
// so results do not depend on the standard library's distributions or on the
// order in which independent streams are consumed.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace dlab::harness {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  constexpr explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)) {}

  /// Independent generator for a sub-task (a trial, a fixture).
  constexpr CounterRng substream(std::uint64_t id) const noexcept { return CounterRng(key_, id); }

  constexpr std::uint64_t next_u64() noexcept { return splitmix64(key_ + splitmix64(counter_++)); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Standard normal by Box-Muller; the second variate is discarded to keep draws stateless.
  double normal() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Standard complex Gaussian, E|z|^2 = 1.
  std::complex<double> complex_normal() noexcept {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  /// Uniform point of the unit circle.
  std::complex<double> phase() noexcept { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dlab::harness
