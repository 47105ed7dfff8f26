#pragma once

// Truncated Dirichlet-series algebra: products, exp/log, evaluation,
// character twists and coefficient-level composition F(phi(s)) for c_0 = 0.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/arith.hpp"

namespace dlab::dirichlet {

using Complex = std::complex<double>;

/// Coefficients a_1..a_N of sum_{n<=N} a_n n^{-s}. All coefficients are finite.
class DirichletPoly {
 public:
  /// coefficients[i] is a_{i+1}. Throws DomainError if empty or non-finite.
  explicit DirichletPoly(std::vector<Complex> coefficients);

  /// delta = 1 (a_1 = 1), padded with zeros to length n.
  static DirichletPoly delta(std::size_t n = 1);
  /// zeta_N: a_n = 1 for n <= N.
  static DirichletPoly zeta(std::size_t n);
  /// value * index^{-s}, padded to length max(index, n).
  static DirichletPoly monomial(std::size_t index, Complex value = 1.0, std::size_t n = 0);

  std::size_t size() const noexcept { return coefficients_.size(); }
  /// a_n for 1 <= n <= size(); zero for n > size().
  Complex coefficient(std::size_t n) const;
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }

  /// Copy truncated or zero-padded to length n.
  DirichletPoly resized(std::size_t n) const;
  DirichletPoly scaled(Complex factor) const;

  friend bool operator==(const DirichletPoly&, const DirichletPoly&) = default;

 private:
  std::vector<Complex> coefficients_;
};

/// Dirichlet product (F*G)_n = sum_{d|n} F_d G_{n/d} for n <= n_out.
/// Rejects n_out > min(|F|, |G|).
DirichletPoly convolve(const DirichletPoly& f, const DirichletPoly& g, std::size_t n_out);

/// exp of a Dirichlet series: G_1 = e^{a_1}, G_n log n = sum_{d|n, d>1} a_d log d G_{n/d}.
DirichletPoly exp_series(const DirichletPoly& f);

/// Inverse of exp_series (principal branch at n = 1). Throws SingularInputError if a_1 = 0.
DirichletPoly log_series(const DirichletPoly& f);

/// sum_{n<=N} a_n n^{-s} with compensated summation.
Complex evaluate(const DirichletPoly& f, Complex s);

/// Exponent vector of n over the primes 2, 3, 5, ... (trailing zeros trimmed).
struct MultiIndex {
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};
MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

/// Largest prime factor kappa accepts; larger ones raise RangeError.
inline constexpr std::uint64_t kMaxKappaPrime = 100'000'000;

MultiIndex kappa(std::uint64_t n);
/// prod p_i^{k_i}; RangeError if the product overflows 64 bits.
std::uint64_t kappa_inv(const MultiIndex& index);

/// The i-th prime (0-based: nth_prime(0) = 2).
std::uint64_t nth_prime(std::size_t i);

/// A point of the polytorus: phases chi_1..chi_m on the first m primes, tail phase 1.
class Character {
 public:
  static constexpr double kUnitTolerance = 1e-12;

  Character() = default;
  /// Throws DomainError unless every | |phase| - 1 | <= 1e-12.
  explicit Character(std::vector<Complex> phases);
  static Character from_angles(std::span<const double> angles);

  std::size_t size() const noexcept { return phases_.size(); }
  /// Phase on the prime with 0-based index i.
  Complex phase(std::size_t prime_index) const noexcept;
  /// chi(n) = chi^{kappa(n)}.
  Complex value(std::uint64_t n) const;

 private:
  std::vector<Complex> phases_;
};

/// chi(1..n) computed multiplicatively; entry i holds chi(i + 1).
std::vector<Complex> character_values(const Character& chi, std::size_t n);

/// a_n -> a_n chi(n).
DirichletPoly twist(const DirichletPoly& f, const Character& chi);

/// a_n -> a_n lambda^{Omega(n)} (with 0^0 = 1). With threshold > 0 only the
/// n with Omega(n) > threshold are kept; threshold = 0 keeps every n.
DirichletPoly lambda_twist(const DirichletPoly& f, Complex lambda, const arith::FactorTable& table,
                           unsigned threshold = 0);

/// Integer threshold equivalent to the indicator Omega(n) > e_{j-3}; zero
/// (no restriction) for j <= 2 where the subscript would be negative.
unsigned omega_threshold_for_level(int j);

/// How compose_zero_c0 reads its inputs.
enum class Truncation {
  /// F and phi are exact polynomials: coefficients beyond their lengths are zero.
  kPolynomial,
  /// phi is a truncated series: n_out may not exceed |phi|.
  kSeries,
};

/// Coefficients of F(phi(s)) = sum_k F_k k^{-c_1} exp(-(log k) phi_0(s)) for
/// n <= n_out, where c_1 is the constant term of phi and phi_0 = phi - c_1.
/// Writes a warning to std::clog when Re c_1 <= 1/2.
DirichletPoly compose_zero_c0(const DirichletPoly& f, const DirichletPoly& phi, std::size_t n_out,
                              Truncation mode = Truncation::kPolynomial);

/// a_p = 1 / (sqrt(p) log p) for primes p <= n, zero elsewhere.
DirichletPoly prime_fixture(std::size_t n);

/// JSON array of [re, im] pairs, first entry a_1.
std::string to_json(const DirichletPoly& f);
DirichletPoly from_json(std::string_view text);

}  // namespace dlab::dirichlet
