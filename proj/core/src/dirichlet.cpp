#include "dlab/dirichlet.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <cmath>
#include <iostream>
#include <string>

#include "dlab/errors.hpp"
#include "dlab/iterlog.hpp"
#include "summation.hpp"

namespace dlab::dirichlet {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::vector<double> log_table(std::size_t n) {
  std::vector<double> logs(n + 1, 0.0);
  for (std::size_t k = 2; k <= n; ++k) logs[k] = std::log(static_cast<double>(k));
  return logs;
}

// exp/log recurrences cancel heavily for coefficients of unit size, so their state
// is carried in extended precision and rounded once at the end.
using Wide = std::complex<long double>;

std::vector<long double> wide_log_table(std::size_t n) {
  std::vector<long double> logs(n + 1, 0.0L);
  for (std::size_t k = 2; k <= n; ++k) logs[k] = std::log(static_cast<long double>(k));
  return logs;
}

DirichletPoly narrow(const std::vector<Wide>& v) {
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Complex(static_cast<double>(v[i].real()), static_cast<double>(v[i].imag()));
  return DirichletPoly(std::move(out));
}

}  // namespace

DirichletPoly::DirichletPoly(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("DirichletPoly: need at least one coefficient");
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (!finite(coefficients_[i])) {
      throw DomainError("DirichletPoly: non-finite coefficient at n=" + std::to_string(i + 1));
    }
  }
}

DirichletPoly DirichletPoly::delta(std::size_t n) {
  std::vector<Complex> a(std::max<std::size_t>(n, 1), 0.0);
  a[0] = 1.0;
  return DirichletPoly(std::move(a));
}

DirichletPoly DirichletPoly::zeta(std::size_t n) {
  return DirichletPoly(std::vector<Complex>(std::max<std::size_t>(n, 1), 1.0));
}

DirichletPoly DirichletPoly::monomial(std::size_t index, Complex value, std::size_t n) {
  if (index == 0) throw DomainError("DirichletPoly::monomial: index must be >= 1");
  std::vector<Complex> a(std::max(index, n), 0.0);
  a[index - 1] = value;
  return DirichletPoly(std::move(a));
}

Complex DirichletPoly::coefficient(std::size_t n) const {
  if (n == 0) throw RangeError("DirichletPoly::coefficient: indices start at 1");
  return n <= coefficients_.size() ? coefficients_[n - 1] : Complex{};
}

DirichletPoly DirichletPoly::resized(std::size_t n) const {
  std::vector<Complex> a(coefficients_);
  a.resize(std::max<std::size_t>(n, 1), 0.0);
  return DirichletPoly(std::move(a));
}

DirichletPoly DirichletPoly::scaled(Complex factor) const {
  std::vector<Complex> a(coefficients_);
  for (auto& c : a) c *= factor;
  return DirichletPoly(std::move(a));
}

DirichletPoly convolve(const DirichletPoly& f, const DirichletPoly& g, std::size_t n_out) {
  if (n_out == 0 || n_out > std::min(f.size(), g.size())) {
    throw TruncationError("convolve: n_out=" + std::to_string(n_out) + " exceeds input lengths " +
                          std::to_string(f.size()) + ", " + std::to_string(g.size()));
  }
  const auto a = f.coefficients();
  const auto b = g.coefficients();
  std::vector<Complex> out(n_out, 0.0);
  for (std::size_t d = 1; d <= n_out; ++d) {
    const Complex fd = a[d - 1];
    if (fd == Complex{}) continue;
    for (std::size_t m = 1, n = d; n <= n_out; ++m, n += d) out[n - 1] += fd * b[m - 1];
  }
  return DirichletPoly(std::move(out));
}

DirichletPoly exp_series(const DirichletPoly& f) {
  const std::size_t n_max = f.size();
  const auto a = f.coefficients();
  const auto logs = wide_log_table(n_max);
  // Weighted coefficients a_d log d, reused for every m.
  std::vector<Wide> weighted(n_max + 1, 0.0L);
  for (std::size_t d = 2; d <= n_max; ++d) weighted[d] = Wide(a[d - 1]) * logs[d];

  std::vector<Wide> g(n_max, 0.0L);
  std::vector<Wide> acc(n_max + 1, 0.0L);
  g[0] = std::exp(Wide(a[0]));
  // acc[n] collects sum a_d log d G_{n/d}; every G_m with m < n is final when n is reached.
  for (std::size_t m = 1; m <= n_max; ++m) {
    if (m > 1) g[m - 1] = acc[m] / logs[m];
    const Wide gm = g[m - 1];
    if (gm == Wide{}) continue;
    for (std::size_t d = 2, n = 2 * m; n <= n_max; ++d, n += m) acc[n] += weighted[d] * gm;
  }
  return narrow(g);
}

DirichletPoly log_series(const DirichletPoly& f) {
  const std::size_t n_max = f.size();
  const auto a = f.coefficients();
  const Wide a1 = a[0];
  if (a1 == Wide{}) throw SingularInputError("log_series: leading coefficient a_1 is zero");
  const auto logs = wide_log_table(n_max);

  // a_n log n = sum_{d|n} L_d log d a_{n/d}; solve for L_n using the d = n term.
  std::vector<Wide> l(n_max, 0.0L);
  std::vector<Wide> acc(n_max + 1, 0.0L);
  l[0] = std::log(a1);
  for (std::size_t d = 2; d <= n_max; ++d) {
    l[d - 1] = (Wide(a[d - 1]) * logs[d] - acc[d]) / (a1 * logs[d]);
    const Wide weighted = l[d - 1] * logs[d];
    if (weighted == Wide{}) continue;
    for (std::size_t m = 2, n = 2 * d; n <= n_max; ++m, n += d) acc[n] += weighted * Wide(a[m - 1]);
  }
  return narrow(l);
}

Complex evaluate(const DirichletPoly& f, Complex s) {
  const auto a = f.coefficients();
  detail::CompensatedComplexSum sum;
  for (std::size_t n = 1; n <= a.size(); ++n) {
    if (a[n - 1] == Complex{}) continue;
    sum.add(a[n - 1] * std::exp(-s * std::log(static_cast<double>(n))));
  }
  return sum.value();
}

DirichletPoly twist(const DirichletPoly& f, const Character& chi) {
  const auto values = character_values(chi, f.size());
  std::vector<Complex> out(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= values[i];
  return DirichletPoly(std::move(out));
}

DirichletPoly lambda_twist(const DirichletPoly& f, Complex lambda, const arith::FactorTable& table,
                           unsigned threshold) {
  if (f.size() > table.limit()) {
    throw RangeError("lambda_twist: series length " + std::to_string(f.size()) + " exceeds table limit");
  }
  std::vector<Complex> powers(256);
  powers[0] = 1.0;  // 0^0 := 1
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * lambda;

  std::vector<Complex> out(f.size());
  const auto a = f.coefficients();
  const auto omega = table.omega_values();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const unsigned k = omega[i];
    if (threshold > 0 && k <= threshold) continue;
    out[i] = a[i] * powers[k];
  }
  return DirichletPoly(std::move(out));
}

unsigned omega_threshold_for_level(int j) {
  if (j <= 2) return 0;
  const double e = asymptotics::tower(j - 3);
  if (!std::isfinite(e) || e >= 255.0) return 255;  // no Omega(n) <= 255 exceeds it
  return static_cast<unsigned>(std::floor(e));
}

DirichletPoly compose_zero_c0(const DirichletPoly& f, const DirichletPoly& phi, std::size_t n_out,
                              Truncation mode) {
  if (n_out == 0) throw TruncationError("compose_zero_c0: n_out must be >= 1");
  if (mode == Truncation::kSeries && n_out > phi.size()) {
    throw TruncationError("compose_zero_c0: n_out=" + std::to_string(n_out) +
                          " needs symbol coefficients beyond its length " + std::to_string(phi.size()));
  }
  const Complex c1 = phi.coefficient(1);
  if (!(c1.real() > 0.5)) {
    std::clog << "warning: compose_zero_c0: Re c_1 = " << c1.real()
              << " <= 1/2, symbol is outside the Gordon-Hedenmalm class\n";
  }

  // k^{-phi_0(s)} = sum_m (-log k)^m phi_0^{*m} / m!, and phi_0^{*m} vanishes
  // below index 2^m, so only m <= floor(log2 n_out) contribute.
  DirichletPoly psi = phi.resized(n_out);
  {
    std::vector<Complex> a(psi.coefficients().begin(), psi.coefficients().end());
    a[0] = 0.0;
    psi = DirichletPoly(std::move(a));
  }
  const std::size_t max_power = static_cast<std::size_t>(std::bit_width(n_out)) - 1;
  std::vector<DirichletPoly> powers;
  powers.reserve(max_power + 1);
  powers.push_back(DirichletPoly::delta(n_out));
  for (std::size_t m = 1; m <= max_power; ++m) {
    powers.push_back(convolve(powers.back(), psi, n_out).scaled(1.0 / static_cast<double>(m)));
  }

  // Moments sum_k F_k k^{-c_1} (-log k)^m.
  std::vector<detail::CompensatedComplexSum> moments(max_power + 1);
  const auto a = f.coefficients();
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (a[k - 1] == Complex{}) continue;
    const double log_k = std::log(static_cast<double>(k));
    Complex term = a[k - 1] * std::exp(-c1 * log_k);
    for (std::size_t m = 0; m <= max_power; ++m) {
      moments[m].add(term);
      term *= -log_k;
    }
  }

  std::vector<Complex> out(n_out, 0.0);
  for (std::size_t m = 0; m <= max_power; ++m) {
    const Complex mu = moments[m].value();
    const auto pm = powers[m].coefficients();
    for (std::size_t n = 0; n < n_out; ++n) out[n] += mu * pm[n];
  }
  return DirichletPoly(std::move(out));
}

DirichletPoly prime_fixture(std::size_t n) {
  if (n < 2) throw DomainError("prime_fixture: need N >= 2");
  std::vector<Complex> a(n, 0.0);
  for (std::uint32_t p : arith::primes_up_to(n)) {
    const double pd = p;
    a[p - 1] = 1.0 / (std::sqrt(pd) * std::log(pd));
  }
  return DirichletPoly(std::move(a));
}

std::string to_json(const DirichletPoly& f) {
  nlohmann::json array = nlohmann::json::array();
  for (const Complex& c : f.coefficients()) array.push_back({c.real(), c.imag()});
  return array.dump();
}

DirichletPoly from_json(std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("DirichletPoly JSON: ") + e.what());
  }
  if (!parsed.is_array()) throw DomainError("DirichletPoly JSON: expected an array of [re, im] pairs");
  std::vector<Complex> a;
  a.reserve(parsed.size());
  for (const auto& pair : parsed) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw DomainError("DirichletPoly JSON: entry " + std::to_string(a.size() + 1) + " is not [re, im]");
    }
    a.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return DirichletPoly(std::move(a));
}

}  // namespace dlab::dirichlet
