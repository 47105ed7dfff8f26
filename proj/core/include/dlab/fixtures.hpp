#pragma once

// Seeded inputs for experiments: Gordon-Hedenmalm symbols with c_0 = 0, random
// Dirichlet and power-series polynomials, characters and disk self-maps.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "dlab/arith.hpp"
#include "dlab/dirichlet.hpp"
#include "dlab/rng.hpp"
#include "dlab/spaces.hpp"

namespace dlab::harness {

using Complex = std::complex<double>;
using dirichlet::DirichletPoly;

/// phi(s) = c_1 + sum_{2<=n<=m} c_n n^{-s} with sum_{n>=2} |c_n| < Re c_1 - 1/2, so that
/// Re phi > 1/2 on Re s > 0.
class GhFixture {
 public:
  /// DomainError unless the l1 margin is positive.
  GhFixture(Complex c1, std::vector<Complex> higher);

  /// c_1 = 3/2, c_2 = 1/4.
  static GhFixture canonical();
  /// Random fixture of length m: Re c_1 in [1, 2], Im c_1 in [-1, 1], and the higher
  /// coefficients using a random fraction in [0.2, 0.9] of the available l1 budget.
  static GhFixture random(CounterRng& rng, std::size_t m);

  Complex c1() const noexcept { return c1_; }
  std::span<const Complex> higher() const noexcept { return higher_; }
  /// Re c_1 - 1/2 - sum |c_n|.
  double margin() const;
  /// Coefficients c_1..c_m, zero-padded to at least n.
  DirichletPoly symbol(std::size_t n = 0) const;

 private:
  Complex c1_;
  std::vector<Complex> higher_;
};

/// i.i.d. complex Gaussian coefficients, rescaled to unit H_w norm.
DirichletPoly random_unit_poly(CounterRng& rng, std::size_t n, const spaces::WeightFamily& family,
                               const arith::FactorTable& table);

/// Coefficients with modulus uniform in [lo, hi] and uniform phase.
DirichletPoly random_annulus_poly(CounterRng& rng, std::size_t n, double lo = 0.5, double hi = 2.0);

/// Uniform phases on the first `primes` primes.
dirichlet::Character random_character(CounterRng& rng, std::size_t primes);

/// Taylor coefficients c_0..c_degree, i.i.d. complex Gaussian.
std::vector<Complex> random_taylor(CounterRng& rng, std::size_t degree);

/// Horner evaluation of sum c_n z^n.
Complex eval_taylor(std::span<const Complex> c, Complex z);

/// Uniform point of the disk |a| <= radius.
Complex random_disk_point(CounterRng& rng, double radius);

/// omega(z) = z (z + a) / (1 + conj(a) z), a self-map of the disk with omega(0) = 0.
spaces::DiskFunction zero_fixing_map(Complex a);
/// omega(z) = (z + a) / (1 + conj(a) z), a disk automorphism with omega(0) = a.
spaces::DiskFunction shifted_automorphism(Complex a);

/// Weights of the same average order as (log_j n)^alpha and the H_{log,j-1} target of
/// composition: j = 1 gives d_{alpha+1} -> (1 + Omega)^alpha, j >= 2 gives
/// (1 + log_{j-2}^+ Omega)^alpha -> (1 + log_{j-1}^+ Omega)^alpha.
struct WeightPair {
  spaces::WeightFamily in;
  spaces::WeightFamily out;
};
WeightPair canonical_weight_pair(int j, double alpha);

}  // namespace dlab::harness
