#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dlab/arith.hpp"
#include "dlab/dirichlet.hpp"
#include "dlab/errors.hpp"

using namespace dlab;
using namespace dlab::dirichlet;

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

// Lambda(n) / log n: 1/k when n = p^k, else 0.
double log_zeta_coefficient(std::uint64_t n) {
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    return n == 1 ? 1.0 / k : 0.0;
  }
  return 0.0;
}

std::vector<double> divisor_function_by_convolution(std::size_t n, int k) {
  std::vector<double> f(n + 1, 1.0);
  f[0] = 0.0;
  for (int step = 1; step < k; ++step) {
    std::vector<double> g(n + 1, 0.0);
    for (std::size_t d = 1; d <= n; ++d) {
      for (std::size_t m = d; m <= n; m += d) g[m] += f[d];
    }
    f = g;
  }
  return f;
}

}  // namespace

TEST(Convolve, Examples) {
  const auto z = DirichletPoly::zeta(10);
  EXPECT_NEAR(convolve(z, z, 10).coefficient(6).real(), 4.0, 1e-15);
  const auto p = convolve(DirichletPoly::monomial(2, 1.0, 6), DirichletPoly::monomial(3, 1.0, 6), 6);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(p.coefficient(n), Complex(n == 6 ? 1.0 : 0.0)) << n;
  EXPECT_THROW(convolve(z, z, 11), TruncationError);
}

TEST(ExpLog, TrivialCases) {
  const auto e = exp_series(DirichletPoly(std::vector<Complex>(20, 0.0)));
  EXPECT_EQ(e, DirichletPoly::delta(20));
  const auto l = log_series(DirichletPoly::delta(20));
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_EQ(l.coefficient(n), Complex(0.0));
  EXPECT_THROW(log_series(DirichletPoly::monomial(2, 1.0, 4)), SingularInputError);
}

TEST(ExpLog, LogZetaIsLambdaOverLog) {
  const auto l = log_series(DirichletPoly::zeta(2000));
  for (std::size_t n = 1; n <= 2000; ++n) {
    ASSERT_NEAR(std::abs(l.coefficient(n) - log_zeta_coefficient(n)), 0.0, 1e-13) << n;
  }
  EXPECT_NEAR(l.coefficient(4).real(), 0.5, 1e-15);
  EXPECT_NEAR(l.coefficient(997).real(), 1.0, 1e-15);
}

TEST(ExpLog, RoundTripZeta) {
  const auto z = DirichletPoly::zeta(10000);
  const auto back = exp_series(log_series(z));
  double worst = 0.0;
  for (std::size_t n = 1; n <= 10000; ++n) worst = std::max(worst, std::abs(back.coefficient(n) - 1.0));
  EXPECT_LE(worst, 1e-12);
}

TEST(ExpLog, ZetaPowersMatchDivisorFunctions) {
  const std::size_t n = 1000;
  const auto log_zeta = log_series(DirichletPoly::zeta(n));
  const auto oracle = divisor_function_by_convolution(n, 3);
  const auto cube = exp_series(log_zeta.scaled(3.0));
  const auto table = arith::build_factor_table(n);
  for (std::size_t m = 1; m <= n; ++m) {
    ASSERT_NEAR(cube.coefficient(m).real() / oracle[m], 1.0, 1e-12) << m;
    ASSERT_NEAR(cube.coefficient(m).real() / arith::d_alpha(m, 3.0, table), 1.0, 1e-12) << m;
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(DirichletPoly::delta(5), {0.3, 7.0}), Complex(1.0));
  EXPECT_NEAR(std::abs(evaluate(DirichletPoly::monomial(2), 1.0) - 0.5), 0.0, 1e-16);
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  EXPECT_NEAR(evaluate(DirichletPoly::zeta(1000), 2.0).real(), zeta2, 1e-3);
}

TEST(Compose, ConstantSymbol) {
  const auto out = compose_zero_c0(DirichletPoly::monomial(2, 1.0, 8), DirichletPoly({1.5}), 8);
  EXPECT_NEAR(std::abs(out.coefficient(1) - std::pow(2.0, -1.5)), 0.0, 1e-15);
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_NEAR(std::abs(out.coefficient(n)), 0.0, 1e-15);
}

TEST(Compose, TwoTermSymbolPowerSeries) {
  // 2^{-phi} with phi = c1 + c2 2^{-s} is 2^{-c1} sum_k (-c2 log 2)^k / k! 2^{-ks}.
  const Complex c1 = 1.5;
  const Complex c2 = 0.25;
  const std::size_t n = 1024;
  const auto out = compose_zero_c0(DirichletPoly::monomial(2, 1.0, n), DirichletPoly({c1, c2}), n);
  Complex term = std::pow(2.0, -c1);
  for (std::size_t k = 0, m = 1; m <= n; ++k, m *= 2) {
    if (k > 0) term *= -c2 * std::log(2.0) / static_cast<double>(k);
    EXPECT_NEAR(std::abs(out.coefficient(m) - term), 0.0, 1e-15) << m;
  }
  EXPECT_NEAR(out.coefficient(4).real(), std::pow(2.0, -1.5) * std::pow(std::log(2.0) / 4.0, 2) / 2.0, 1e-16);
  EXPECT_NEAR(std::abs(out.coefficient(3)), 0.0, 1e-16);
}

TEST(Compose, DeltaIsFixed) {
  const auto out = compose_zero_c0(DirichletPoly::delta(16), DirichletPoly({Complex(1.2, 0.3), 0.1, 0.05}), 16);
  EXPECT_EQ(out, DirichletPoly::delta(16));
}

TEST(Compose, PointEvaluationAgreesWithSubstitution) {
  // Deep in the half-plane the truncated tail is negligible, so F(phi(s)) evaluated
  // directly must match the composed coefficients.
  const DirichletPoly f({0.3, Complex(-0.2, 0.1), 0.7, 0.05, Complex(0.0, 0.4)});
  const DirichletPoly phi({Complex(1.4, 0.2), 0.2, Complex(0.0, -0.1), 0.05});
  const auto composed = compose_zero_c0(f, phi.resized(4096), 4096, Truncation::kSeries);
  for (const Complex s : {Complex(8.0, 0.0), Complex(8.0, 3.0), Complex(10.0, -5.0)}) {
    const Complex direct = evaluate(f, evaluate(phi, s));
    EXPECT_NEAR(std::abs(evaluate(composed, s) - direct), 0.0, 1e-12) << s;
  }
}

TEST(Twist, Examples) {
  const auto f = DirichletPoly::zeta(12);
  EXPECT_EQ(twist(f, Character(std::vector<Complex>(5, 1.0))), f);
  const auto g = twist(DirichletPoly::monomial(2, 1.0, 3), Character({-1.0, 1.0}));
  EXPECT_EQ(g.coefficient(2), Complex(-1.0));
  EXPECT_THROW(Character({Complex(0.5, 0.0)}), DomainError);
}

TEST(Twist, CompletelyMultiplicative) {
  const Character chi({Complex(0.0, 1.0), std::polar(1.0, 0.7), -1.0});
  EXPECT_NEAR(std::abs(chi.value(12) - chi.value(4) * chi.value(3)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(chi.value(8) - Complex(0.0, -1.0)), 0.0, 1e-15);
  EXPECT_EQ(chi.value(1), Complex(1.0));
}

TEST(LambdaTwist, Examples) {
  const auto table = arith::build_factor_table(16);
  const auto f = DirichletPoly::zeta(16);
  EXPECT_EQ(lambda_twist(f, 1.0, table), f);
  const auto zero = lambda_twist(f, 0.0, table);
  EXPECT_EQ(zero.coefficient(1), Complex(1.0));
  for (std::size_t n = 2; n <= 16; ++n) EXPECT_EQ(zero.coefficient(n), Complex(0.0)) << n;
  const auto i12 = lambda_twist(DirichletPoly::monomial(12, 1.0, 12), Complex(0.0, 1.0), table);
  EXPECT_NEAR(std::abs(i12.coefficient(12) - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa(12).exponents, (std::vector<std::uint32_t>{2, 1}));
  EXPECT_TRUE(kappa(1).exponents.empty());
  for (std::uint64_t n = 1; n <= 5000; ++n) ASSERT_EQ(kappa_inv(kappa(n)), n);
  EXPECT_EQ(kappa_inv(kappa(6) + kappa(35)), 210u);
  EXPECT_THROW(kappa_inv(MultiIndex{{64}}), RangeError);
}

TEST(PrimeFixture, SupportedOnPrimes) {
  const auto f = prime_fixture(200);
  for (std::size_t n = 1; n <= 200; ++n) {
    if (!is_prime(n)) EXPECT_EQ(f.coefficient(n), Complex(0.0)) << n;
    else EXPECT_NE(f.coefficient(n), Complex(0.0)) << n;
  }
}

TEST(Json, RoundTrip) {
  const DirichletPoly f({Complex(1.0, -2.5), 0.1, Complex(0.0, 1e-300)});
  EXPECT_EQ(from_json(to_json(f)), f);
  EXPECT_THROW(from_json("{\"a\": 1}"), DomainError);
}
