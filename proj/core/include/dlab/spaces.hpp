#pragma once

// Weighted Hilbert spaces H_w of Dirichlet series and the iterated-log
// Bergman spaces D_{alpha,j} on the disk and on the half-plane Re s > 1/2.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dlab/arith.hpp"
#include "dlab/dirichlet.hpp"

namespace dlab::spaces {

using Complex = std::complex<double>;
using dirichlet::DirichletPoly;

enum class WeightKind {
  kUnit,                // w_n = 1
  kDivisorPow,          // d(n)^alpha
  kGeneralizedDivisor,  // d_{alpha+1}(n)
  kOmegaPow,            // (1 + Omega(n))^alpha
  kIterLogOmega,        // (1 + log_j^+ Omega(n))^alpha, j >= 1
};

struct WeightFamily {
  WeightKind kind = WeightKind::kUnit;
  double alpha = 1.0;
  int j = 0;

  static WeightFamily unit() { return {}; }
  static WeightFamily divisor_pow(double alpha);
  static WeightFamily generalized_divisor(double alpha);
  static WeightFamily omega_pow(double alpha);
  /// j = 0 collapses to omega_pow(alpha) since log_0 x = x.
  static WeightFamily iter_log_omega(int j, double alpha);

  /// Short tag such as "gdiv:1" or "iterlog:1:2", accepted by parse().
  std::string name() const;
  static WeightFamily parse(const std::string& tag);

  friend bool operator==(const WeightFamily&, const WeightFamily&) = default;
};

double weight_value(const WeightFamily& family, std::uint64_t n, const arith::FactorTable& table);
/// w_1..w_n; entry i holds w_{i+1}.
std::vector<double> weight_values(const WeightFamily& family, std::size_t n, const arith::FactorTable& table);

/// sum_n |a_n|^2 / w_n.
double hw_norm_sq(const DirichletPoly& f, const WeightFamily& family, const arith::FactorTable& table);

enum class Domain { kDisk, kHalfPlane };

/// Range of the iterated-log product in dv_{alpha,j} and dmu_j^*, j >= 2.
enum class ProductRange {
  kToJMinus2,  // prod_{l=1}^{j-2}, the definition
  kToJMinus1,  // prod_{l=1}^{j-1}, as written in the subordination argument
};

/// Parameters of dv_{alpha,j} (disk) or its pullback dmu_j (half-plane).
class BergmanSpec {
 public:
  /// Largest level whose tower constants e_{j-2} stay finite.
  static constexpr int kMaxLevel = 5;

  BergmanSpec(double alpha, int j, Domain domain = Domain::kDisk,
              ProductRange range = ProductRange::kToJMinus2);

  double alpha() const noexcept { return alpha_; }
  int j() const noexcept { return j_; }
  Domain domain() const noexcept { return domain_; }
  ProductRange range() const noexcept { return range_; }
  /// Exponent of L_{j-1} after absorbing the product: alpha, or alpha + 1 for kToJMinus1 (j >= 2).
  double tail_exponent() const noexcept;
  /// Tower constant e_l for 0 <= l <= j.
  double e(int level) const;

 private:
  double alpha_;
  int j_;
  Domain domain_;
  ProductRange range_;
  std::vector<double> towers_;
};

/// Density of dv_{alpha,j} with respect to normalised area dA = area / pi.
double disk_density(Complex z, const BergmanSpec& spec);

/// sum_{n<=M} |c_n|^2 / (1 + log_{j-1}^+ n)^alpha, with log_0^+ n = n.
double coeff_norm_sq(std::span<const Complex> taylor, const BergmanSpec& spec);

struct GridOptions {
  int radial = 256;
  int angular = 512;
};

/// Product rule on the disk: equispaced angles times a radial rule adapted to dv_{alpha,j}.
///
/// j = 1 uses Gauss-Jacobi in u = 1 - r^2 with weight alpha u^{alpha-1}, exact
/// for radial polynomials of degree < 2R. j >= 2 uses Gauss-Legendre in
/// w = L_{j-1}^{-alpha}, L_{j-1} = log_{j-1}(e_{j-1} / u), which maps the
/// measure to (a bounded multiple of) Lebesgue measure on (0, 1].
class DiskGrid {
 public:
  struct Ring {
    double radius;
    double weight;  // radial mass; the angular average is applied separately
  };

  explicit DiskGrid(const BergmanSpec& spec, GridOptions options = {});

  std::span<const Ring> rings() const noexcept { return rings_; }
  int angular() const noexcept { return angular_; }
  std::size_t node_count() const noexcept { return rings_.size() * static_cast<std::size_t>(angular_); }
  /// Node z = r_k e^{2 pi i t / T}.
  Complex node(std::size_t ring, int t) const;
  /// Quadrature mass of the constant function 1.
  double total_mass() const;
  /// Quadrature values of ||z^n||^2 for n = 0..count-1 (exact in the angle for n < angular).
  std::vector<double> monomial_norms_sq(std::size_t count) const;

 private:
  std::vector<Ring> rings_;
  int angular_;
  std::vector<Complex> unit_roots_;
};

using DiskFunction = std::function<Complex(Complex)>;

/// Quadrature of int_D |f|^2 dv_{alpha,j}. EvaluationError names the first node with a non-finite value.
double disk_norm_sq(const DiskFunction& f, const BergmanSpec& spec, const DiskGrid& grid);

/// tau(s) = (s - 3/2) / (s + 1/2), mapping Re s > 1/2 onto the unit disk.
Complex tau(Complex s);
/// tau^{-1}(z) = (3 + z) / (2 (1 - z)).
Complex tau_inv(Complex z);

/// ||F||^2 in D_{alpha,j,i}(C_{1/2}), defined as the disk norm of F o tau^{-1}.
double halfplane_norm_sq(const DirichletPoly& f, const BergmanSpec& spec, const DiskGrid& grid);

/// Repeated half-plane norms of series of a fixed maximal length on one grid.
/// Precomputes n^{-s} at every pulled-back node, so memory is nodes * length * 16 bytes.
class HalfplaneNormBatch {
 public:
  static constexpr std::size_t kMaxBytes = std::size_t{512} << 20;

  HalfplaneNormBatch(const DiskGrid& grid, std::size_t length);

  std::size_t length() const noexcept { return length_; }
  double norm_sq(const DirichletPoly& f) const;

 private:
  std::size_t length_;
  std::vector<Complex> basis_;  // node-major, n = 1..length
  std::vector<double> node_weights_;
};

/// Density of dmu_j^* at sigma in (1/2, 1]. For j = 1 we use alpha (sigma - 1/2)^{alpha - 1},
/// the sigma-part of dmu_1.
double mu_star_density(double sigma, const BergmanSpec& spec);

struct SubordinationPair {
  double lhs;  // int |f(omega(z))|^2 dv
  double rhs;  // int |f(z)|^2 dv
};

/// Both sides of the subordination inequality. MappingError if omega leaves the open disk at a node.
SubordinationPair subordination_pair(const DiskFunction& f, const DiskFunction& omega, const BergmanSpec& spec,
                                     const DiskGrid& grid);

/// Taylor coefficients c_0..c_{count-1} of f from a discrete Cauchy integral on |z| = rho.
std::vector<Complex> taylor_coefficients(const DiskFunction& f, std::size_t count, double rho = 0.9);

}  // namespace dlab::spaces
