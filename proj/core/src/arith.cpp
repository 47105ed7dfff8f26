#include "dlab/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "dlab/errors.hpp"

namespace dlab::arith {

FactorTable::FactorTable(std::uint64_t limit, std::vector<std::uint32_t> spf,
                         std::vector<std::uint8_t> omega)
    : limit_(limit), spf_(std::move(spf)), omega_(std::move(omega)) {
  if (limit_ == 0) throw DomainError("FactorTable: limit must be >= 1");
  if (omega_.size() != limit_) throw DomainError("FactorTable: omega array length differs from limit");
  if (!spf_.empty() && spf_.size() != limit_ + 1) {
    throw DomainError("FactorTable: spf array length differs from limit + 1");
  }
}

std::uint32_t FactorTable::spf(std::uint64_t n) const {
  if (!has_spf()) throw DomainError("FactorTable: smallest prime factors were not built");
  if (n < 2 || n > limit_) throw RangeError("FactorTable::spf: n=" + std::to_string(n) + " out of range");
  return spf_[n];
}

std::uint8_t FactorTable::omega(std::uint64_t n) const {
  if (n < 1 || n > limit_) throw RangeError("FactorTable::omega: n=" + std::to_string(n) + " out of range");
  return omega_[n - 1];
}

namespace {

void check_limit(std::uint64_t limit) {
  if (limit == 0) throw CapacityError("build_factor_table: limit must be >= 1");
  if (limit > kMaxSieveLimit) {
    throw CapacityError("build_factor_table: limit " + std::to_string(limit) + " exceeds budget " +
                        std::to_string(kMaxSieveLimit));
  }
}

FactorTable linear_sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint8_t> omega(limit, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      omega[i - 1] = 1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint8_t next = omega[i - 1] + 1;
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > limit) break;
      spf[i * p] = p;
      omega[i * p - 1] = next;
    }
  }
  return FactorTable(limit, std::move(spf), std::move(omega));
}

void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> small_primes,
                   std::vector<std::uint32_t>& spf, std::vector<std::uint8_t>& omega) {
  std::vector<std::uint64_t> rest(hi - lo);
  for (std::uint64_t n = lo; n < hi; ++n) rest[n - lo] = n;
  for (std::uint64_t p : small_primes) {
    if (p * p >= hi) break;
    for (std::uint64_t m = ((lo + p - 1) / p) * p; m < hi; m += p) {
      std::uint64_t& r = rest[m - lo];
      if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(p);
      do {
        r /= p;
        ++omega[m - 1];
      } while (r % p == 0);
    }
  }
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n) {
    if (rest[n - lo] > 1) {
      ++omega[n - 1];
      if (spf[n] == 0) spf[n] = static_cast<std::uint32_t>(rest[n - lo]);
    }
  }
}

FactorTable segmented_sieve(std::uint64_t limit, const SieveOptions& options) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint8_t> omega(limit, 0);
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> small_primes = primes_up_to(root);

  const std::uint64_t segment = options.segment_size;
  const std::uint64_t segment_count = (limit + segment) / segment;  // covers 1..limit
  const unsigned threads = std::max(1u, options.threads);

  // Segments write disjoint index ranges, so the result is independent of scheduling.
  auto work = [&](unsigned worker) {
    for (std::uint64_t s = worker; s < segment_count; s += threads) {
      const std::uint64_t lo = std::max<std::uint64_t>(1, s * segment);
      const std::uint64_t hi = std::min(limit + 1, (s + 1) * segment);
      if (lo < hi) sieve_segment(lo, hi, small_primes, spf, omega);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  return FactorTable(limit, std::move(spf), std::move(omega));
}

}  // namespace

FactorTable build_factor_table(std::uint64_t limit, const SieveOptions& options) {
  check_limit(limit);
  if (options.segment_size == 0) return linear_sieve(limit);
  return segmented_sieve(limit, options);
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit > kMaxSieveLimit) throw CapacityError("primes_up_to: limit exceeds sieve budget");
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = true;
  }
  return primes;
}

std::vector<PrimePower> factorize(std::uint64_t n, const FactorTable& table) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  if (n > table.limit()) throw RangeError("factorize: n=" + std::to_string(n) + " exceeds table limit");
  std::vector<PrimePower> out;
  if (table.has_spf()) {
    while (n > 1) {
      const std::uint64_t p = table.spf(n);
      unsigned k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      out.push_back({p, k});
    }
    return out;
  }
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

double generalized_binomial(unsigned k, double alpha) {
  double value = 1.0;
  for (unsigned i = 1; i <= k; ++i) value *= (alpha - 1.0 + i) / i;
  return value;
}

double d_alpha(std::uint64_t n, double alpha, const FactorTable& table) {
  if (n == 0) throw DomainError("d_alpha: n must be >= 1");
  if (!(alpha > 0.0)) throw DomainError("d_alpha: alpha must be > 0");
  double value = 1.0;
  for (const auto& [p, k] : factorize(n, table)) value *= generalized_binomial(k, alpha);
  return value;
}

std::uint64_t divisor_count(std::uint64_t n, const FactorTable& table) {
  std::uint64_t count = 1;
  for (const auto& pk : factorize(n, table)) count *= pk.exponent + 1;
  return count;
}

OmegaHistogram count_omega_classes(const FactorTable& table) {
  return count_omega_classes(table, table.limit());
}

OmegaHistogram count_omega_classes(const FactorTable& table, std::uint64_t upto) {
  if (upto == 0 || upto > table.limit()) {
    throw RangeError("count_omega_classes: prefix " + std::to_string(upto) + " outside table");
  }
  OmegaHistogram h;
  h.limit = upto;
  // floor(log X / log 2), computed in integers.
  h.counts.assign(static_cast<std::size_t>(std::bit_width(upto)), 0);
  const auto omega = table.omega_values().first(upto);
  for (std::uint8_t k : omega) ++h.counts[k];
  return h;
}

double sum_omega_power(const OmegaHistogram& histogram, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("sum_omega_power: alpha must be > 0");
  double sum = 0.0;
  for (std::size_t k = 1; k < histogram.counts.size(); ++k) {
    sum += std::pow(static_cast<double>(k), alpha) * static_cast<double>(histogram.counts[k]);
  }
  return sum;
}

double sum_omega_power(const FactorTable& table, double alpha) {
  return sum_omega_power(count_omega_classes(table), alpha);
}

std::vector<double> erdos_kac_samples(const FactorTable& table, std::uint64_t n_min) {
  if (n_min < kErdosKacMinIndex) {
    throw DomainError("erdos_kac_samples: n_min must be >= 16 so that log log n > 1");
  }
  std::vector<double> samples;
  if (n_min > table.limit()) return samples;
  samples.reserve(table.limit() - n_min + 1);
  const auto omega = table.omega_values();
  for (std::uint64_t n = n_min; n <= table.limit(); ++n) {
    const double ll = std::log(std::log(static_cast<double>(n)));
    samples.push_back((omega[n - 1] - ll) / std::sqrt(ll));
  }
  return samples;
}

}  // namespace dlab::arith
