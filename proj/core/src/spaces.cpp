#include "dlab/spaces.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "dlab/errors.hpp"
#include "dlab/gauss.hpp"
#include "dlab/iterlog.hpp"
#include "summation.hpp"

namespace dlab::spaces {

namespace {

using asymptotics::iter_log_plus;
using asymptotics::shifted_iter_exp;
using asymptotics::shifted_iter_log;

void require_positive_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError(std::string(who) + ": alpha must be a finite positive number");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string format_node(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

// alpha/x * prod_l L_l^{-1} * L_{j-1}^{-(alpha+1)} with L_l = log_l(e_l / x), x = e^{-v}.
double iterated_density(double x, double v, const BergmanSpec& spec) {
  const int j = spec.j();
  const int last = spec.range() == ProductRange::kToJMinus1 ? j - 1 : j - 2;
  double density = spec.alpha() / x;
  for (int l = 1; l <= last; ++l) density /= shifted_iter_log(l, v);
  return density * std::pow(shifted_iter_log(j - 1, v), -(spec.alpha() + 1.0));
}

constexpr double kMappingSlack = 64 * std::numeric_limits<double>::epsilon();

double clamp_radius(double r) {
  const double below_one = std::nextafter(1.0, 0.0);
  return r < below_one ? r : below_one;
}

}  // namespace

WeightFamily WeightFamily::divisor_pow(double alpha) {
  require_positive_alpha(alpha, "WeightFamily::divisor_pow");
  return {WeightKind::kDivisorPow, alpha, 0};
}

WeightFamily WeightFamily::generalized_divisor(double alpha) {
  require_positive_alpha(alpha, "WeightFamily::generalized_divisor");
  return {WeightKind::kGeneralizedDivisor, alpha, 0};
}

WeightFamily WeightFamily::omega_pow(double alpha) {
  require_positive_alpha(alpha, "WeightFamily::omega_pow");
  return {WeightKind::kOmegaPow, alpha, 0};
}

WeightFamily WeightFamily::iter_log_omega(int j, double alpha) {
  require_positive_alpha(alpha, "WeightFamily::iter_log_omega");
  if (j < 0) throw DomainError("WeightFamily::iter_log_omega: j must be >= 0");
  if (j == 0) return omega_pow(alpha);
  return {WeightKind::kIterLogOmega, alpha, j};
}

std::string WeightFamily::name() const {
  std::ostringstream os;
  os << std::defaultfloat;
  switch (kind) {
    case WeightKind::kUnit: return "unit";
    case WeightKind::kDivisorPow: os << "dpow:" << alpha; break;
    case WeightKind::kGeneralizedDivisor: os << "gdiv:" << alpha; break;
    case WeightKind::kOmegaPow: os << "omega:" << alpha; break;
    case WeightKind::kIterLogOmega: os << "iterlog:" << j << ":" << alpha; break;
  }
  return os.str();
}

WeightFamily WeightFamily::parse(const std::string& tag) {
  std::vector<std::string> parts;
  std::stringstream ss(tag);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto number = [&](const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw DomainError("weight tag '" + tag + "': bad number '" + text + "'");
    return value;
  };
  if (parts.size() == 1 && parts[0] == "unit") return unit();
  if (parts.size() == 2) {
    if (parts[0] == "dpow") return divisor_pow(number(parts[1]));
    if (parts[0] == "gdiv") return generalized_divisor(number(parts[1]));
    if (parts[0] == "omega") return omega_pow(number(parts[1]));
  }
  if (parts.size() == 3 && parts[0] == "iterlog") {
    const double j = number(parts[1]);
    if (j != std::floor(j)) throw DomainError("weight tag '" + tag + "': j must be an integer");
    return iter_log_omega(static_cast<int>(j), number(parts[2]));
  }
  throw DomainError("unknown weight tag '" + tag + "' (expected unit, dpow:a, gdiv:a, omega:a or iterlog:j:a)");
}

double weight_value(const WeightFamily& family, std::uint64_t n, const arith::FactorTable& table) {
  if (n == 0 || n > table.limit()) {
    throw RangeError("weight_value: n=" + std::to_string(n) + " outside [1, " + std::to_string(table.limit()) + "]");
  }
  switch (family.kind) {
    case WeightKind::kUnit: return 1.0;
    case WeightKind::kDivisorPow:
      return std::pow(static_cast<double>(arith::divisor_count(n, table)), family.alpha);
    case WeightKind::kGeneralizedDivisor: return arith::d_alpha(n, family.alpha + 1.0, table);
    case WeightKind::kOmegaPow: return std::pow(1.0 + table.omega(n), family.alpha);
    case WeightKind::kIterLogOmega:
      return std::pow(1.0 + iter_log_plus(family.j, static_cast<double>(table.omega(n))), family.alpha);
  }
  return 1.0;
}

std::vector<double> weight_values(const WeightFamily& family, std::size_t n, const arith::FactorTable& table) {
  if (n > table.limit()) throw RangeError("weight_values: n exceeds table limit");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = weight_value(family, i + 1, table);
  return w;
}

double hw_norm_sq(const DirichletPoly& f, const WeightFamily& family, const arith::FactorTable& table) {
  const auto w = weight_values(family, f.size(), table);
  const auto a = f.coefficients();
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum.add(std::norm(a[i]) / w[i]);
  return sum.value();
}

BergmanSpec::BergmanSpec(double alpha, int j, Domain domain, ProductRange range)
    : alpha_(alpha), j_(j), domain_(domain), range_(range) {
  require_positive_alpha(alpha, "BergmanSpec");
  if (j < 1 || j > kMaxLevel) {
    throw DomainError("BergmanSpec: j must be in [1, " + std::to_string(kMaxLevel) + "]");
  }
  for (int l = 0; l <= j; ++l) towers_.push_back(asymptotics::tower(l));
}

double BergmanSpec::e(int level) const {
  if (level < 0 || level > j_) throw RangeError("BergmanSpec::e: level outside [0, j]");
  return towers_[static_cast<std::size_t>(level)];
}

double BergmanSpec::tail_exponent() const noexcept {
  return (j_ >= 2 && range_ == ProductRange::kToJMinus1) ? alpha_ + 1.0 : alpha_;
}

double disk_density(Complex z, const BergmanSpec& spec) {
  const double r2 = std::norm(z);
  if (!(r2 < 1.0)) throw DomainError("disk_density: |z| must be < 1");
  const double u = 1.0 - r2;
  if (spec.j() == 1) return spec.alpha() * std::pow(u, spec.alpha() - 1.0);
  return iterated_density(u, -std::log1p(-r2), spec);
}

double coeff_norm_sq(std::span<const Complex> taylor, const BergmanSpec& spec) {
  detail::CompensatedSum sum;
  for (std::size_t n = 0; n < taylor.size(); ++n) {
    const double weight = std::pow(1.0 + iter_log_plus(spec.j() - 1, static_cast<double>(n)), spec.alpha());
    sum.add(std::norm(taylor[n]) / weight);
  }
  return sum.value();
}

DiskGrid::DiskGrid(const BergmanSpec& spec, GridOptions options) : angular_(options.angular) {
  if (options.radial < 1 || options.angular < 1) throw DomainError("DiskGrid: node counts must be positive");
  rings_.reserve(static_cast<std::size_t>(options.radial));
  if (spec.j() == 1) {
    // alpha u^{alpha-1} du is the radial law of dv_{alpha,1} with u = 1 - r^2.
    const auto rule = quadrature::gauss_jacobi_unit(options.radial, spec.alpha() - 1.0);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      rings_.push_back({clamp_radius(std::sqrt(1.0 - rule.nodes[k])), rule.weights[k]});
    }
  } else {
    // dv = (alpha / beta) ratio(v) dw with w = L_{j-1}^{-beta}, v = log(1/u).
    const double beta = spec.tail_exponent();
    const auto rule = quadrature::gauss_legendre_unit(options.radial);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double q = std::pow(rule.nodes[k], -1.0 / beta);
      const double v = shifted_iter_exp(spec.j() - 1, q);
      const double r = std::isinf(v) ? 1.0 : std::sqrt(-std::expm1(-v));
      rings_.push_back({clamp_radius(r), rule.weights[k] * spec.alpha() / beta * asymptotics::iter_log_product_ratio(spec.j(), v)});
    }
  }
  unit_roots_.resize(static_cast<std::size_t>(angular_));
  for (int t = 0; t < angular_; ++t) {
    unit_roots_[static_cast<std::size_t>(t)] = std::polar(1.0, 2.0 * std::numbers::pi * t / angular_);
  }
}

Complex DiskGrid::node(std::size_t ring, int t) const {
  return rings_.at(ring).radius * unit_roots_.at(static_cast<std::size_t>(t));
}

double DiskGrid::total_mass() const {
  detail::CompensatedSum sum;
  for (const auto& ring : rings_) sum.add(ring.weight);
  return sum.value();
}

std::vector<double> DiskGrid::monomial_norms_sq(std::size_t count) const {
  std::vector<detail::CompensatedSum> sums(count);
  for (const auto& ring : rings_) {
    const double r2 = ring.radius * ring.radius;
    double power = 1.0;
    for (std::size_t n = 0; n < count; ++n, power *= r2) sums[n].add(ring.weight * power);
  }
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = sums[n].value();
  return out;
}

double disk_norm_sq(const DiskFunction& f, const BergmanSpec& /*spec*/, const DiskGrid& grid) {
  detail::CompensatedSum total;
  const auto rings = grid.rings();
  for (std::size_t k = 0; k < rings.size(); ++k) {
    detail::CompensatedSum ring_sum;
    for (int t = 0; t < grid.angular(); ++t) {
      const Complex z = grid.node(k, t);
      const Complex value = f(z);
      if (!finite(value)) throw EvaluationError("disk_norm_sq: non-finite value at z = " + format_node(z), z);
      ring_sum.add(std::norm(value));
    }
    total.add(rings[k].weight * ring_sum.value() / grid.angular());
  }
  return total.value();
}

Complex tau(Complex s) {
  const Complex den = s + 0.5;
  if (den == Complex{}) throw DomainError("tau: pole at s = -1/2");
  return (s - 1.5) / den;
}

Complex tau_inv(Complex z) {
  const Complex den = 2.0 * (1.0 - z);
  if (den == Complex{}) throw DomainError("tau_inv: pole at z = 1");
  return (3.0 + z) / den;
}

double halfplane_norm_sq(const DirichletPoly& f, const BergmanSpec& spec, const DiskGrid& grid) {
  return disk_norm_sq([&](Complex z) { return dirichlet::evaluate(f, tau_inv(z)); }, spec, grid);
}

HalfplaneNormBatch::HalfplaneNormBatch(const DiskGrid& grid, std::size_t length) : length_(length) {
  if (length == 0) throw DomainError("HalfplaneNormBatch: length must be >= 1");
  const std::size_t nodes = grid.node_count();
  if (nodes > kMaxBytes / sizeof(Complex) / length) {
    throw CapacityError("HalfplaneNormBatch: " + std::to_string(nodes) + " nodes x " + std::to_string(length) +
                        " terms exceed " + std::to_string(kMaxBytes >> 20) + " MiB");
  }
  const auto table = arith::build_factor_table(std::max<std::size_t>(length, 2));
  basis_.resize(nodes * length);
  node_weights_.reserve(nodes);
  const auto rings = grid.rings();
  std::size_t row = 0;
  for (std::size_t k = 0; k < rings.size(); ++k) {
    for (int t = 0; t < grid.angular(); ++t, ++row) {
      const Complex s = tau_inv(grid.node(k, t));
      Complex* b = basis_.data() + row * length;
      b[0] = 1.0;
      for (std::size_t n = 2; n <= length; ++n) {
        const std::uint32_t p = table.spf(n);
        b[n - 1] = (p == n) ? std::exp(-s * std::log(static_cast<double>(n))) : b[p - 1] * b[n / p - 1];
      }
      node_weights_.push_back(rings[k].weight / grid.angular());
    }
  }
}

double HalfplaneNormBatch::norm_sq(const DirichletPoly& f) const {
  if (f.size() > length_) {
    throw RangeError("HalfplaneNormBatch: series length " + std::to_string(f.size()) + " exceeds " +
                     std::to_string(length_));
  }
  const auto a = f.coefficients();
  detail::CompensatedSum total;
  for (std::size_t row = 0; row < node_weights_.size(); ++row) {
    const Complex* b = basis_.data() + row * length_;
    Complex value = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) value += a[n] * b[n];
    total.add(node_weights_[row] * std::norm(value));
  }
  return total.value();
}

double mu_star_density(double sigma, const BergmanSpec& spec) {
  if (!(sigma > 0.5 && sigma <= 1.0)) throw DomainError("mu_star_density: sigma must lie in (1/2, 1]");
  const double x = sigma - 0.5;
  if (spec.j() == 1) return spec.alpha() * std::pow(x, spec.alpha() - 1.0);
  return iterated_density(x, -std::log(x), spec);
}

SubordinationPair subordination_pair(const DiskFunction& f, const DiskFunction& omega, const BergmanSpec& spec,
                                     const DiskGrid& grid) {
  const double lhs = disk_norm_sq(
      [&](Complex z) {
        Complex w = omega(z);
        // Nodes sit within ~1e-9 of the circle for j >= 2, where a genuine self-map can
        // round onto or just past it; such images are pulled back radially.
        if (!(std::norm(w) < 1.0) && std::abs(w) <= 1.0 + kMappingSlack) {
          w *= (1.0 - 4 * std::numeric_limits<double>::epsilon()) / std::abs(w);
        }
        if (!(std::norm(w) < 1.0)) {
          throw MappingError("subordination_pair: omega maps z = " + format_node(z) + " to " + format_node(w) +
                                 ", outside the open disk",
                             z, w);
        }
        return f(w);
      },
      spec, grid);
  return {lhs, disk_norm_sq(f, spec, grid)};
}

std::vector<Complex> taylor_coefficients(const DiskFunction& f, std::size_t count, double rho) {
  if (count == 0) throw DomainError("taylor_coefficients: count must be >= 1");
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("taylor_coefficients: rho must lie in (0, 1)");
  // Aliasing adds c_{k+M} rho^M; M = 4 count keeps that far below the kept terms.
  const std::size_t m = std::max<std::size_t>(256, 4 * count);
  std::vector<Complex> samples(m);
  for (std::size_t t = 0; t < m; ++t) {
    const Complex z = std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m));
    samples[t] = f(z);
    if (!finite(samples[t])) throw EvaluationError("taylor_coefficients: non-finite value at " + format_node(z), z);
  }
  std::vector<Complex> c(count);
  for (std::size_t k = 0; k < count; ++k) {
    detail::CompensatedComplexSum sum;
    for (std::size_t t = 0; t < m; ++t) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((k * t) % m) / static_cast<double>(m);
      sum.add(samples[t] * std::polar(1.0, angle));
    }
    c[k] = sum.value() / static_cast<double>(m) * std::pow(rho, -static_cast<double>(k));
  }
  return c;
}

}  // namespace dlab::spaces
