#pragma once

// Asymptotic predictors and the quantities they are checked against:
// the iterated-log integral behind the D_{alpha,j} embedding, the Sathe-Selberg
// factor nu(z), average orders of Omega(n)^alpha and Erdos-Kac statistics.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "dlab/iterlog.hpp"

namespace dlab::asymptotics {

using Complex = std::complex<double>;

inline constexpr double kLemmaRelTol = 1e-10;
inline constexpr double kLemmaAbsTol = 1e-30;

/// I(L) = int_0^1 e^{-tL} (prod_{l=1}^{j-2} log_l(e_l/t))^{-1} (log_{j-1}(e_{j-1}/t))^{-(alpha+1)} dt/t
/// for n = e^L, 2 <= j <= 5, in the variable v = log(1/t). The whole of (0, 1] is integrated: the
/// t -> 0 tail goes through w = log_{j-1}(e_{j-1}/t)^{-alpha}, which makes it a finite integral.
/// Throws ToleranceError if the adaptive rule misses relative 1e-10 / absolute 1e-30.
double lemma32_integral(double log_n, double alpha, int j);

/// The same integrand restricted to t in [t_lo, t_hi] within (0, 1].
double lemma32_partial(double log_n, double alpha, int j, double t_lo, double t_hi);

/// (1/alpha) (log_j n)^{-alpha}, with log_j n = iter_log_plus(j - 1, log n). DomainError if that is not > 0.
double lemma32_asymptotic(double log_n, double alpha, int j);

/// 1 / Gamma(z), entire; Lanczos (g = 7, 9 terms) with reflection for Re z < 1/2.
Complex reciprocal_gamma(Complex z);
Complex gamma_complex(Complex z);

struct NuProductConfig {
  std::uint64_t prime_cutoff = 1'000'000;
  /// Multiply by exp((z^2 - z)/2 * sum_{p>P} p^{-2}), the m = 2 term of the missing factors.
  bool tail_correction = true;
};

struct NuValue {
  Complex value;
  /// Estimated bound on |log nu - log nu_computed| from the omitted primes.
  double residual_bound;
};

/// nu(z) = (1/Gamma(z+1)) prod_{p<=P} (1 - z/p)^{-1} (1 - 1/p)^z for |z| < 2.
/// Holds the primes up to P so repeated evaluations skip the sieve.
class NuProduct {
 public:
  explicit NuProduct(NuProductConfig config = {});

  const NuProductConfig& config() const noexcept { return config_; }
  NuValue evaluate(Complex z) const;

 private:
  NuProductConfig config_;
  std::vector<std::uint32_t> primes_;
};

Complex nu(Complex z, const NuProductConfig& config = {});

/// Sathe-Selberg main term X/log X * (log log X)^{k-1}/(k-1)! * Re nu((k-1)/log log X).
/// DomainError for X < 16, k < 1, or (k-1)/log log X >= 2.
double sathe_selberg_Nk(double x, int k, const NuProduct& product);
double sathe_selberg_Nk(double x, int k, const NuProductConfig& config = {});
/// Relative error scale k / (log log X)^2 of the Sathe-Selberg main term.
double sathe_selberg_error_scale(double x, int k);

struct AverageOrderPrediction {
  double main;         // X (log log X)^alpha
  double error_scale;  // X (log log X)^{alpha-1}
};

/// Main term and error scale for sum_{n<=X} Omega(n)^alpha. DomainError for X < 16 or alpha < 1.
AverageOrderPrediction prop41_prediction(double x, double alpha);

/// (C X / 2^k) log(X / 2^k). DomainError if 2^k > X or C <= 0.
double nicolas_range_bound(double x, int k, double c);

/// Standard normal CDF, 0.5 erfc(-x / sqrt 2).
double normal_cdf(double x);

/// sup_x |F_n(x) - Phi(x)| over both one-sided limits at each sample. DomainError on empty input.
double ks_statistic(std::span<const double> samples);

}  // namespace dlab::asymptotics
