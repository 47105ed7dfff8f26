#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dlab/arith.hpp"
#include "dlab/asymptotics.hpp"
#include "dlab/errors.hpp"
#include "dlab/iterlog.hpp"

using namespace dlab;
using namespace dlab::asymptotics;

namespace {

// Midpoint sum in y = log(1 + v), v = log(1/t), of
// int_0^1 e^{-tL} prod_{l<=j-2} L_l^{-1} L_{j-1}^{-(alpha+1)} dt/t for j = 2, 3,
// plus the t -> 0 tail in closed form (e^{-tL} = 1 there).
double lemma_riemann(double big_l, double alpha, int j) {
  auto level = [](int l, double v) {
    double y = (l == 1 ? 1.0 : std::numbers::e) + v;
    return l == 1 ? y : std::log(y);
  };
  const double y_max = 200.0;
  const int steps = 2'000'000;
  const double h = y_max / steps;
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double y = (i + 0.5) * h;
    const double v = std::expm1(y);
    double g = std::exp(-big_l * std::exp(-v)) * std::pow(level(j - 1, v), -alpha - 1.0);
    if (j == 3) g /= level(1, v);
    sum += g * (1.0 + v);
  }
  return sum * h + std::pow(level(j - 1, std::expm1(y_max)), -alpha) / alpha;
}

double normal_quantile(double p) {
  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (0.5 * std::erfc(-mid / std::sqrt(2.0)) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST(IterLog, Examples) {
  EXPECT_EQ(iter_log_plus(0, 7.0), 7.0);
  EXPECT_NEAR(iter_log_plus(2, std::exp(std::numbers::e)), 1.0, 1e-15);
  EXPECT_EQ(iter_log_plus(1, 0.5), 0.0);
  EXPECT_EQ(iter_log_plus(3, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(tower(0), 1.0);
  EXPECT_DOUBLE_EQ(tower(2), std::exp(std::numbers::e));
  EXPECT_TRUE(std::isinf(tower(4)));
  for (int level : {1, 2, 3}) {
    EXPECT_NEAR(shifted_iter_exp(level, shifted_iter_log(level, 3.5)), 3.5, 1e-9) << level;
  }
}

TEST(IterLogIntegral, AsymptoticExamples) {
  EXPECT_DOUBLE_EQ(lemma32_asymptotic(std::exp(4.0), 1.0, 2), 0.25);
  EXPECT_NEAR(lemma32_asymptotic(std::exp(4.0), 2.0, 2), 1.0 / 32.0, 1e-16);
  EXPECT_THROW(lemma32_asymptotic(0.5, 1.0, 2), DomainError);
}

TEST(IterLogIntegral, MatchesRiemannSum) {
  const double big_l = std::exp(3.0);
  for (int j : {2, 3}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      EXPECT_NEAR(lemma32_integral(big_l, alpha, j), lemma_riemann(big_l, alpha, j), 1e-6)
          << "j=" << j << " alpha=" << alpha;
    }
  }
}

TEST(IterLogIntegral, PartialsAddUp) {
  const double big_l = std::exp(5.0);
  const double whole = lemma32_integral(big_l, 1.0, 2);
  const double split = lemma32_partial(big_l, 1.0, 2, 0.0, 0.01) + lemma32_partial(big_l, 1.0, 2, 0.01, 1.0);
  EXPECT_NEAR(split / whole, 1.0, 1e-9);
  EXPECT_EQ(lemma32_partial(big_l, 1.0, 2, 0.3, 0.3), 0.0);
  EXPECT_THROW(lemma32_partial(big_l, 1.0, 2, 0.5, 0.2), DomainError);
}

TEST(IterLogIntegral, DecaysInL) {
  double previous = lemma32_integral(std::exp(2.0), 1.0, 2);
  for (double k = 4.0; k <= 12.0; k += 2.0) {
    const double now = lemma32_integral(std::exp(k), 1.0, 2);
    EXPECT_LT(now, previous) << k;
    previous = now;
  }
  EXPECT_LT(previous, 0.1);
}

TEST(IterLogIntegral, ArgumentChecks) {
  EXPECT_THROW(lemma32_integral(10.0, 1.0, 1), DomainError);
  EXPECT_THROW(lemma32_integral(10.0, 1.0, 6), DomainError);
  EXPECT_THROW(lemma32_integral(10.0, 0.0, 2), DomainError);
  EXPECT_THROW(lemma32_integral(-1.0, 1.0, 2), DomainError);
}

TEST(Gamma, RealAndReflection) {
  for (double x : {0.3, 0.5, 1.0, 2.5, 7.0, -0.5, -2.7}) {
    EXPECT_NEAR(std::abs(gamma_complex(x) / std::tgamma(x) - 1.0), 0.0, 1e-13) << x;
  }
  EXPECT_NEAR(std::abs(reciprocal_gamma(-3.0)), 0.0, 1e-15);
  const Complex z(0.3, 1.7);
  const Complex reflected = std::numbers::pi / std::sin(std::numbers::pi * z);
  EXPECT_NEAR(std::abs(gamma_complex(z) * gamma_complex(1.0 - z) / reflected - 1.0), 0.0, 1e-13);
}

TEST(Nu, Examples) {
  EXPECT_NEAR(std::abs(nu(0.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(nu(1.0) - 1.0), 0.0, 1e-12);
  EXPECT_THROW(nu(2.0), DomainError);
  const NuProduct coarse({100'000, true});
  const NuProduct fine({2'000'000, true});
  const auto a = coarse.evaluate(1.5);
  const auto b = fine.evaluate(1.5);
  EXPECT_LT(std::abs(a.value - b.value), 10 * a.residual_bound + 1e-12);
}

TEST(SatheSelberg, WithinQuarterOfSieve) {
  const std::uint64_t x = 10'000'000;
  const auto counts = arith::count_omega_classes(arith::build_factor_table(x)).counts;
  for (int k : {2, 3, 4}) {
    EXPECT_LE(std::abs(sathe_selberg_Nk(static_cast<double>(x), k) / counts[k] - 1.0), 0.25) << k;
  }
  EXPECT_DOUBLE_EQ(sathe_selberg_error_scale(1e7, 3), 3.0 / std::pow(std::log(std::log(1e7)), 2));
  EXPECT_THROW(sathe_selberg_Nk(10.0, 2), DomainError);
}

TEST(AverageOrderPrediction, Examples) {
  const double x = std::exp(std::exp(2.0));
  EXPECT_NEAR(prop41_prediction(x, 1.0).main / (2.0 * x), 1.0, 1e-14);
  const double ll = std::log(std::log(1e7));
  EXPECT_NEAR(prop41_prediction(1e7, 1.0).main, 1e7 * ll, 1e-6);
  EXPECT_NEAR(prop41_prediction(1e7, 2.0).error_scale, 1e7 * ll, 1e-6);
  EXPECT_THROW(prop41_prediction(1e7, 0.5), DomainError);
}

TEST(Nicolas, Examples) {
  EXPECT_DOUBLE_EQ(nicolas_range_bound(1024.0, 10, 3.0), 0.0);
  const double q = 1e6 / std::pow(2.0, 19);
  EXPECT_NEAR(nicolas_range_bound(1e6, 19, 1.0), q * std::log(q), 1e-12);
  EXPECT_THROW(nicolas_range_bound(1e6, 25, 1.0), DomainError);
}

TEST(Ks, QuantileSamples) {
  const int n = 999;
  std::vector<double> s(n);
  for (int i = 0; i < n; ++i) s[i] = normal_quantile((i + 1.0) / (n + 1.0));
  EXPECT_LE(ks_statistic(s), 1.0 / (n + 1.0) + 1e-7);
  EXPECT_GE(ks_statistic(std::vector<double>(50, 0.7)), 0.5);
  EXPECT_THROW(ks_statistic(std::vector<double>{}), DomainError);
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
}
