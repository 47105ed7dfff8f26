#include "dlab/asymptotics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "dlab/errors.hpp"

namespace dlab::asymptotics {

namespace {

constexpr unsigned kMaxDepth = 15;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_lemma_args(double log_n, double alpha, int j, const char* who) {
  if (!(log_n > 0.0) || !std::isfinite(log_n)) throw DomainError(std::string(who) + ": log n must be finite and > 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError(std::string(who) + ": alpha must be > 0");
  if (j < 2 || j > kMaxFiniteTower + 2) {
    throw DomainError(std::string(who) + ": j must be in [2, " + std::to_string(kMaxFiniteTower + 2) + "]");
  }
}

struct Piece {
  double value;
  double error;
};

// boost sums panel error estimates in the units of each panel's [-1, 1] rescaling, so the
// interval is cut into panels of width <= 2 where that sum bounds the absolute error.
// A panel whose one-shot error is already below abs_floor is not refined: far out the
// integrand underflows and a relative target there can never be met.
template <typename F>
Piece gk_integrate(F f, double a, double b, double abs_floor = 0.0) {
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 2.0)));
  Piece total{0.0, 0.0};
  for (int i = 0; i < panels; ++i) {
    const double lo = a + (b - a) * i / panels;
    const double hi = (i + 1 == panels) ? b : a + (b - a) * (i + 1) / panels;
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double error = 0.0;
    double value = GK::integrate(f, lo, hi, 0, kLemmaRelTol, &error);
    if (!(error * 0.5 * (hi - lo) <= abs_floor)) value = GK::integrate(f, lo, hi, kMaxDepth, kLemmaRelTol, &error);
    total.value += value;
    total.error += error * 0.5 * (hi - lo);
  }
  return total;
}

// Integral over v = log(1/t) in [v_lo, v_hi], v_hi possibly infinite, in three regimes:
// v itself up to v_far, where e^{-L e^{-v}} has reached 1; y = log(1 + v) up to v_huge, since the
// iterated logs decay too slowly in v for a finite panel count; and beyond v_huge, where the
// product has flattened out, w = L_{j-1}(v)^{-alpha}, which makes the rest (1/alpha) int_0^{w_huge}.
double integrate_v(double log_n, double alpha, int j, double v_lo, double v_hi, const char* who) {
  auto in_v = [&](double v) {
    double density = std::exp(-log_n * std::exp(-v));
    for (int l = 1; l <= j - 2; ++l) density /= shifted_iter_log(l, v);
    return density * std::pow(shifted_iter_log(j - 1, v), -(alpha + 1.0));
  };
  auto in_y = [&](double y) {
    const double v = std::expm1(y);
    return in_v(v) * (1.0 + v);
  };
  auto in_w = [&](double w) {
    if (w <= 0.0) return 1.0;
    const double v = shifted_iter_exp(j - 1, std::pow(w, -1.0 / alpha));
    if (std::isinf(v)) return 1.0;
    return std::exp(-log_n * std::exp(-v)) * iter_log_product_ratio(j, v);
  };

  constexpr double v_huge = 1e300;
  const double v_turn = std::log(log_n);
  const double v_far = std::max(2.0 * v_turn, 0.0) + 30.0;

  Piece total{0.0, 0.0};
  auto add = [&](Piece piece, double factor) {
    total.value += piece.value * factor;
    total.error += piece.error * factor;
  };
  // Refinement floor for later regimes, well under the requested relative accuracy.
  auto floor = [&] { return 1e-3 * kLemmaRelTol * std::abs(total.value); };
  auto clip = [&](double lo, double hi) { return std::pair{std::max(lo, v_lo), std::min(hi, v_hi)}; };

  for (auto [lo, hi] : {clip(0.0, std::max(v_turn, 0.0)), clip(std::max(v_turn, 0.0), v_far)}) {
    if (hi > lo) add(gk_integrate(in_v, lo, hi, floor()), 1.0);
  }
  if (const auto [lo, hi] = clip(v_far, v_huge); hi > lo) add(gk_integrate(in_y, std::log1p(lo), std::log1p(hi), floor()), 1.0);
  if (v_hi > v_huge) {
    const double w_start = std::pow(shifted_iter_log(j - 1, std::max(v_lo, v_huge)), -alpha);
    const double w_stop = std::isinf(v_hi) ? 0.0 : std::pow(shifted_iter_log(j - 1, v_hi), -alpha);
    add(gk_integrate(in_w, w_stop, w_start, alpha * floor()), 1.0 / alpha);
  }
  if (!(total.error <= std::max(kLemmaRelTol * std::abs(total.value), kLemmaAbsTol))) {
    throw ToleranceError(std::string(who) + ": adaptive quadrature missed tolerance", total.value, total.error);
  }
  return total.value;
}

}  // namespace

double lemma32_integral(double log_n, double alpha, int j) {
  check_lemma_args(log_n, alpha, j, "lemma32_integral");
  return integrate_v(log_n, alpha, j, 0.0, kInf, "lemma32_integral");
}

double lemma32_partial(double log_n, double alpha, int j, double t_lo, double t_hi) {
  check_lemma_args(log_n, alpha, j, "lemma32_partial");
  if (!(t_lo >= 0.0 && t_lo <= t_hi && t_hi <= 1.0)) {
    throw DomainError("lemma32_partial: need 0 <= t_lo <= t_hi <= 1");
  }
  if (t_lo == t_hi) return 0.0;
  const double v_lo = -std::log(t_hi);
  const double v_hi = t_lo > 0.0 ? -std::log(t_lo) : kInf;
  return integrate_v(log_n, alpha, j, v_lo, v_hi, "lemma32_partial");
}

double lemma32_asymptotic(double log_n, double alpha, int j) {
  check_lemma_args(log_n, alpha, j, "lemma32_asymptotic");
  const double log_j_n = iter_log_plus(j - 1, log_n);
  if (!(log_j_n > 0.0)) throw DomainError("lemma32_asymptotic: log_j n is not positive at this n");
  return std::pow(log_j_n, -alpha) / alpha;
}

double sathe_selberg_Nk(double x, int k, const NuProduct& product) {
  if (!(x >= 16.0)) throw DomainError("sathe_selberg_Nk: X must be >= 16");
  if (k < 1) throw DomainError("sathe_selberg_Nk: k must be >= 1");
  const double ll = std::log(std::log(x));
  const double z = (k - 1) / ll;
  if (!(z < 2.0)) throw DomainError("sathe_selberg_Nk: (k-1)/log log X must be < 2");
  const double log_main = std::log(x) - std::log(std::log(x)) + (k - 1) * std::log(ll) - std::lgamma(k);
  return std::exp(log_main) * product.evaluate(z).value.real();
}

double sathe_selberg_Nk(double x, int k, const NuProductConfig& config) {
  return sathe_selberg_Nk(x, k, NuProduct(config));
}

double sathe_selberg_error_scale(double x, int k) {
  if (!(x >= 16.0)) throw DomainError("sathe_selberg_error_scale: X must be >= 16");
  const double ll = std::log(std::log(x));
  return k / (ll * ll);
}

AverageOrderPrediction prop41_prediction(double x, double alpha) {
  if (!(x >= 16.0)) throw DomainError("prop41_prediction: X must be >= 16");
  if (!(alpha >= 1.0)) throw DomainError("prop41_prediction: alpha must be >= 1");
  const double ll = std::log(std::log(x));
  return {x * std::pow(ll, alpha), x * std::pow(ll, alpha - 1.0)};
}

double nicolas_range_bound(double x, int k, double c) {
  if (!(c > 0.0)) throw DomainError("nicolas_range_bound: C must be > 0");
  if (k < 0) throw DomainError("nicolas_range_bound: k must be >= 0");
  const double ratio = x / std::ldexp(1.0, k);
  if (!(ratio >= 1.0)) throw DomainError("nicolas_range_bound: 2^k exceeds X");
  return c * ratio * std::log(ratio);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double ks_statistic(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("ks_statistic: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    // Ties: the empirical CDF jumps over the whole run at once.
    std::size_t end = i;
    while (end < sorted.size() && sorted[end] == sorted[i]) ++end;
    const double phi = normal_cdf(sorted[i]);
    sup = std::max({sup, std::abs(phi - i / n), std::abs(end / n - phi)});
    i = end;
  }
  return sup;
}

}  // namespace dlab::asymptotics
