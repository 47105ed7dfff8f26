#pragma once

// Sieves and exact evaluation of Omega(n), d_alpha(n), N_k(X) and S_Omega^alpha(X).

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace dlab::arith {

/// Largest sieve limit accepted by build_factor_table. A full table costs
/// about 5 bytes per entry (u32 smallest prime factor + u8 Omega), so the
/// ceiling corresponds to roughly 5 GB.
inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000;

struct SieveOptions {
  /// 0 selects the single-pass linear sieve; otherwise a segmented sieve
  /// with segments of this many integers.
  std::uint64_t segment_size = 0;
  /// Worker threads for the segmented sieve. Output does not depend on it.
  unsigned threads = 1;
};

/// Smallest prime factors and Omega(n) for 1 <= n <= limit.
///
/// A table loaded from a cache file carries Omega only (has_spf() is false);
/// factorisation-based queries then fall back to trial division.
class FactorTable {
 public:
  FactorTable(std::uint64_t limit, std::vector<std::uint32_t> spf, std::vector<std::uint8_t> omega);

  std::uint64_t limit() const noexcept { return limit_; }
  bool has_spf() const noexcept { return !spf_.empty(); }

  /// Smallest prime factor of n, 2 <= n <= limit. Requires has_spf().
  std::uint32_t spf(std::uint64_t n) const;
  /// Omega(n), 1 <= n <= limit.
  std::uint8_t omega(std::uint64_t n) const;
  /// Omega(1..limit), index 0 holds Omega(1).
  std::span<const std::uint8_t> omega_values() const noexcept { return omega_; }

  friend bool operator==(const FactorTable&, const FactorTable&) = default;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;  // indexed by n, entries 0 and 1 unused
  std::vector<std::uint8_t> omega_;
};

FactorTable build_factor_table(std::uint64_t limit, const SieveOptions& options = {});

/// All primes p <= limit in increasing order.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::vector<PrimePower> factorize(std::uint64_t n, const FactorTable& table);

/// binom(k + alpha - 1, k) as the running product prod_{i=1..k} (alpha - 1 + i) / i.
double generalized_binomial(unsigned k, double alpha);

/// d_alpha(n), the n-th Dirichlet coefficient of zeta(s)^alpha.
double d_alpha(std::uint64_t n, double alpha, const FactorTable& table);

/// Number of divisors d(n) = d_2(n), exact.
std::uint64_t divisor_count(std::uint64_t n, const FactorTable& table);

/// N_k(X) = #{n <= X : Omega(n) = k} for k = 0..floor(log2 X).
struct OmegaHistogram {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> counts;
};

OmegaHistogram count_omega_classes(const FactorTable& table);
/// Histogram of the prefix n <= upto of a larger table.
OmegaHistogram count_omega_classes(const FactorTable& table, std::uint64_t upto);

/// S_Omega^alpha(X) = sum_{n <= X} Omega(n)^alpha, evaluated as sum_k k^alpha N_k(X).
double sum_omega_power(const OmegaHistogram& histogram, double alpha);
double sum_omega_power(const FactorTable& table, double alpha);

inline constexpr std::uint64_t kErdosKacMinIndex = 16;

/// (Omega(n) - log log n) / sqrt(log log n) for n_min <= n <= limit, in index order.
std::vector<double> erdos_kac_samples(const FactorTable& table, std::uint64_t n_min = kErdosKacMinIndex);

// Binary cache: "DLAB", u32 version, u64 X, X bytes of Omega(1..X), then the
// first 8 bytes of SHA-256 over the Omega bytes. All integers little-endian.
// The spf array is not stored; a loaded table has has_spf() == false.
inline constexpr std::uint32_t kCacheVersion = 1;

void save_cache(const FactorTable& table, const std::filesystem::path& path);
FactorTable load_cache(const std::filesystem::path& path);

}  // namespace dlab::arith
