#include <array>
#include <cmath>
#include <numbers>

#include "dlab/arith.hpp"
#include "dlab/asymptotics.hpp"
#include "dlab/errors.hpp"
#include "summation.hpp"

namespace dlab::asymptotics {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Gamma(z) for Re z >= 1/2.
Complex lanczos_gamma(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Below this prime the factor is taken through complex logs; above, through its power series.
constexpr std::uint32_t kSeriesFrom = 64;

// sum_{m>=2} (z^m - z) / (m p^m) = log[(1 - z/p)^{-1} (1 - 1/p)^z].
Complex log_factor_series(Complex z, double p) {
  Complex sum = 0.0;
  Complex zm = z;
  double pm = 1.0 / p;
  for (int m = 2; m < 64; ++m) {
    zm *= z;
    pm /= p;
    const Complex term = (zm - z) * (pm / m);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

Complex gamma_complex(Complex z) {
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    const Complex s = std::sin(std::numbers::pi * z);
    if (s == Complex{}) throw DomainError("gamma_complex: pole at a non-positive integer");
    return std::numbers::pi / (s * lanczos_gamma(1.0 - z));
  }
  return lanczos_gamma(z);
}

Complex reciprocal_gamma(Complex z) {
  if (z.real() < 0.5) return std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z) / std::numbers::pi;
  return 1.0 / lanczos_gamma(z);
}

NuProduct::NuProduct(NuProductConfig config) : config_(config) {
  if (config_.prime_cutoff < 2) throw DomainError("NuProduct: prime cutoff must be >= 2");
  primes_ = arith::primes_up_to(config_.prime_cutoff);
}

NuValue NuProduct::evaluate(Complex z) const {
  const double r = std::abs(z);
  if (!(r < 2.0)) throw DomainError("nu: |z| must be < 2");

  detail::CompensatedComplexSum log_product;
  for (std::uint32_t p : primes_) {
    const double pd = p;
    if (p < kSeriesFrom) {
      log_product.add(-std::log(1.0 - z / pd) + z * std::log1p(-1.0 / pd));
    } else {
      log_product.add(log_factor_series(z, pd));
    }
  }

  // sum_{p>P} p^{-2} ~ 1 / (P log P); the relative error of that estimate is O(1/log P).
  const double big_p = static_cast<double>(config_.prime_cutoff);
  const double prime_tail = 1.0 / (big_p * std::log(big_p));
  const Complex second = (z * z - z) * 0.5;
  // m >= 3 terms over p > P, bounded by a geometric series in |z|/P.
  const double higher = (r * r * r + r) / 3.0 / (2.0 * big_p * big_p) / (1.0 - r / big_p);

  Complex log_value = log_product.value();
  double residual = higher;
  if (config_.tail_correction) {
    log_value += second * prime_tail;
    residual += std::abs(second) * prime_tail * 2.0 / std::log(big_p);
  } else {
    residual += std::abs(second) * prime_tail * (1.0 + 2.0 / std::log(big_p));
  }
  return {reciprocal_gamma(z + 1.0) * std::exp(log_value), residual};
}

Complex nu(Complex z, const NuProductConfig& config) { return NuProduct(config).evaluate(z).value; }

}  // namespace dlab::asymptotics
