#include "dlab/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dlab/errors.hpp"

namespace dlab::harness {

GhFixture::GhFixture(Complex c1, std::vector<Complex> higher) : c1_(c1), higher_(std::move(higher)) {
  if (!(margin() > 0.0)) {
    throw DomainError("GhFixture: sum |c_n| must be < Re c_1 - 1/2 (margin " + std::to_string(margin()) + ")");
  }
}

GhFixture GhFixture::canonical() { return GhFixture(1.5, {0.25}); }

GhFixture GhFixture::random(CounterRng& rng, std::size_t m) {
  if (m < 1) throw DomainError("GhFixture::random: m must be >= 1");
  const Complex c1(rng.uniform(1.0, 2.0), rng.uniform(-1.0, 1.0));
  const double budget = (c1.real() - 0.5) * rng.uniform(0.2, 0.9);
  std::vector<Complex> higher(m - 1);
  double total = 0.0;
  for (auto& c : higher) {
    c = rng.uniform() * rng.phase();
    total += std::abs(c);
  }
  if (total > 0.0) {
    for (auto& c : higher) c *= budget / total;
  }
  return GhFixture(c1, std::move(higher));
}

double GhFixture::margin() const {
  double l1 = 0.0;
  for (const auto& c : higher_) l1 += std::abs(c);
  return c1_.real() - 0.5 - l1;
}

DirichletPoly GhFixture::symbol(std::size_t n) const {
  std::vector<Complex> a;
  a.reserve(std::max(n, higher_.size() + 1));
  a.push_back(c1_);
  a.insert(a.end(), higher_.begin(), higher_.end());
  if (a.size() < n) a.resize(n, 0.0);
  return DirichletPoly(std::move(a));
}

DirichletPoly random_unit_poly(CounterRng& rng, std::size_t n, const spaces::WeightFamily& family,
                               const arith::FactorTable& table) {
  if (n == 0) throw DomainError("random_unit_poly: length must be >= 1");
  std::vector<Complex> a(n);
  for (auto& c : a) c = rng.complex_normal();
  DirichletPoly f(std::move(a));
  return f.scaled(1.0 / std::sqrt(spaces::hw_norm_sq(f, family, table)));
}

DirichletPoly random_annulus_poly(CounterRng& rng, std::size_t n, double lo, double hi) {
  if (n == 0) throw DomainError("random_annulus_poly: length must be >= 1");
  std::vector<Complex> a(n);
  for (auto& c : a) c = rng.uniform(lo, hi) * rng.phase();
  return DirichletPoly(std::move(a));
}

dirichlet::Character random_character(CounterRng& rng, std::size_t primes) {
  std::vector<Complex> phases(primes);
  for (auto& p : phases) p = rng.phase();
  return dirichlet::Character(std::move(phases));
}

std::vector<Complex> random_taylor(CounterRng& rng, std::size_t degree) {
  std::vector<Complex> c(degree + 1);
  for (auto& x : c) x = rng.complex_normal();
  return c;
}

Complex eval_taylor(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex random_disk_point(CounterRng& rng, double radius) {
  return std::sqrt(rng.uniform()) * radius * rng.phase();
}

spaces::DiskFunction zero_fixing_map(Complex a) {
  if (!(std::abs(a) < 1.0)) throw DomainError("zero_fixing_map: |a| must be < 1");
  return [a](Complex z) { return z * (z + a) / (1.0 + std::conj(a) * z); };
}

spaces::DiskFunction shifted_automorphism(Complex a) {
  if (!(std::abs(a) < 1.0)) throw DomainError("shifted_automorphism: |a| must be < 1");
  return [a](Complex z) { return (z + a) / (1.0 + std::conj(a) * z); };
}

WeightPair canonical_weight_pair(int j, double alpha) {
  using spaces::WeightFamily;
  if (j < 1) throw DomainError("canonical_weight_pair: j must be >= 1");
  if (j == 1) return {WeightFamily::generalized_divisor(alpha), WeightFamily::omega_pow(alpha)};
  return {WeightFamily::iter_log_omega(j - 2, alpha), WeightFamily::iter_log_omega(j - 1, alpha)};
}

}  // namespace dlab::harness
