#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "dlab/dirichlet.hpp"
#include "dlab/errors.hpp"

namespace dlab::dirichlet {

namespace {

// Primes in increasing order, extended on demand up to kMaxKappaPrime.
class PrimeCache {
 public:
  static PrimeCache& instance() {
    static PrimeCache cache;
    return cache;
  }

  // Index of prime p in the sequence 2, 3, 5, ...
  std::size_t rank(std::uint64_t p) {
    std::lock_guard lock(mutex_);
    extend_to(p);
    const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    return static_cast<std::size_t>(it - primes_.begin());
  }

  std::uint64_t nth(std::size_t i) {
    std::lock_guard lock(mutex_);
    while (primes_.size() <= i) {
      if (sieved_to_ >= kMaxKappaPrime) {
        throw RangeError("nth_prime: index " + std::to_string(i) + " beyond primes <= " +
                         std::to_string(kMaxKappaPrime));
      }
      extend_to(2 * sieved_to_);
    }
    return primes_[i];
  }

  // Primes up to min(bound, kMaxKappaPrime), copied under the lock.
  std::vector<std::uint32_t> primes_through(std::uint64_t bound) {
    std::lock_guard lock(mutex_);
    extend_to(bound);
    const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
    return {primes_.begin(), end};
  }

 private:
  void extend_to(std::uint64_t bound) {
    bound = std::min(bound, kMaxKappaPrime);
    if (bound <= sieved_to_) return;
    const std::uint64_t target =
        std::min(kMaxKappaPrime, std::max<std::uint64_t>({bound, 2 * sieved_to_, 4096}));
    primes_ = arith::primes_up_to(target);
    sieved_to_ = target;
  }

  std::mutex mutex_;
  std::vector<std::uint32_t> primes_;
  std::uint64_t sieved_to_ = 1;
};

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out;
  out.exponents.resize(std::max(a.exponents.size(), b.exponents.size()), 0);
  for (std::size_t i = 0; i < a.exponents.size(); ++i) out.exponents[i] += a.exponents[i];
  for (std::size_t i = 0; i < b.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  while (!out.exponents.empty() && out.exponents.back() == 0) out.exponents.pop_back();
  return out;
}

MultiIndex kappa(std::uint64_t n) {
  if (n == 0) throw DomainError("kappa: n must be >= 1");
  auto& cache = PrimeCache::instance();
  MultiIndex index;
  auto bump = [&](std::size_t rank, std::uint32_t k) {
    if (index.exponents.size() <= rank) index.exponents.resize(rank + 1, 0);
    index.exponents[rank] += k;
  };

  std::uint64_t rest = n;
  const auto primes = cache.primes_through(isqrt(n));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    std::uint32_t k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    bump(i, k);
  }
  if (rest > 1) {
    if (rest > kMaxKappaPrime) {
      throw RangeError("kappa: prime factor above " + std::to_string(kMaxKappaPrime) + " in n=" +
                       std::to_string(n));
    }
    bump(cache.rank(rest), 1);
  }
  return index;
}

std::uint64_t kappa_inv(const MultiIndex& index) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < index.exponents.size(); ++i) {
    if (index.exponents[i] == 0) continue;
    const std::uint64_t p = nth_prime(i);
    for (std::uint32_t k = 0; k < index.exponents[i]; ++k) {
      if (__builtin_mul_overflow(n, p, &n)) throw RangeError("kappa_inv: product overflows 64 bits");
    }
  }
  return n;
}

std::uint64_t nth_prime(std::size_t i) { return PrimeCache::instance().nth(i); }

Character::Character(std::vector<Complex> phases) : phases_(std::move(phases)) {
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    if (!(std::abs(std::abs(phases_[i]) - 1.0) <= kUnitTolerance)) {
      throw DomainError("Character: phase " + std::to_string(i) + " is not unimodular");
    }
  }
}

Character Character::from_angles(std::span<const double> angles) {
  std::vector<Complex> phases;
  phases.reserve(angles.size());
  for (double theta : angles) phases.push_back(std::polar(1.0, theta));
  return Character(std::move(phases));
}

Complex Character::phase(std::size_t prime_index) const noexcept {
  return prime_index < phases_.size() ? phases_[prime_index] : Complex(1.0);
}

Complex Character::value(std::uint64_t n) const {
  const MultiIndex index = kappa(n);
  Complex value = 1.0;
  for (std::size_t i = 0; i < index.exponents.size(); ++i) {
    for (std::uint32_t k = 0; k < index.exponents[i]; ++k) value *= phase(i);
  }
  return value;
}

std::vector<Complex> character_values(const Character& chi, std::size_t n) {
  std::vector<Complex> values(std::max<std::size_t>(n, 1), 1.0);
  if (n < 2) return values;
  const auto table = arith::build_factor_table(n);
  std::vector<std::uint32_t> rank(n + 1, 0);
  std::uint32_t next_rank = 0;
  for (std::size_t m = 2; m <= n; ++m) {
    const std::uint32_t p = table.spf(m);
    if (p == m) {
      rank[m] = next_rank++;
      values[m - 1] = chi.phase(rank[m]);
    } else {
      values[m - 1] = values[p - 1] * values[m / p - 1];
    }
  }
  return values;
}

}  // namespace dlab::dirichlet
