#include "dlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>

#include "dlab/asymptotics.hpp"
#include "dlab/errors.hpp"

namespace dlab::harness {

namespace {

using dirichlet::DirichletPoly;
using spaces::WeightFamily;

// Tolerance for checks that demand value < 0 under the value <= tolerance rule.
constexpr double kBelowZero = -std::numeric_limits<double>::denorm_min();

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string tag(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out = "[";
  for (const auto& [key, value] : fields) {
    if (out.size() > 1) out += ",";
    out += key;
    out += "=";
    out += value;
  }
  return out + "]";
}

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

const char* range_name(spaces::ProductRange range) {
  return range == spaces::ProductRange::kToJMinus2 ? "definition" : "extended";
}

nlohmann::ordered_json grid_json(const spaces::GridOptions& grid) {
  return {{"radial", grid.radial}, {"angular", grid.angular}};
}

WeightFamily raise_level(const WeightFamily& family, int by) {
  if (by == 0) return family;
  switch (family.kind) {
    case spaces::WeightKind::kOmegaPow: return WeightFamily::iter_log_omega(by, family.alpha);
    case spaces::WeightKind::kIterLogOmega: return WeightFamily::iter_log_omega(family.j + by, family.alpha);
    default: return family;
  }
}

}  // namespace

arith::FactorTable obtain_table(std::uint64_t limit, const TableSource& source) {
  if (source.cache && std::filesystem::exists(*source.cache)) {
    auto table = arith::load_cache(*source.cache);
    if (table.limit() >= limit) return table;
  }
  return arith::build_factor_table(limit, source.sieve);
}

ExperimentReport run_sieve(const SieveConfig& config) {
  const Stopwatch clock;
  ExperimentReport report;
  report.experiment = "sieve";
  report.params = {{"limit", config.limit},
                   {"segment_size", config.sieve.segment_size},
                   {"threads", config.sieve.threads},
                   {"cache", config.cache ? config.cache->string() : ""}};
  const auto table = arith::build_factor_table(config.limit, config.sieve);
  const auto histogram = arith::count_omega_classes(table);
  report.info("primes", histogram.counts.size() > 1 ? static_cast<double>(histogram.counts[1]) : 0.0);
  report.info("max_omega", static_cast<double>(histogram.counts.size() - 1));
  for (std::size_t k = 0; k < histogram.counts.size(); ++k) {
    report.info("count@" + std::to_string(k), static_cast<double>(histogram.counts[k]));
  }
  if (config.cache) {
    arith::save_cache(table, *config.cache);
    const auto reloaded = arith::load_cache(*config.cache);
    const auto a = table.omega_values();
    const auto b = reloaded.omega_values();
    const bool same = reloaded.limit() == table.limit() && std::equal(a.begin(), a.end(), b.begin(), b.end());
    report.check("cache_roundtrip_mismatch", same ? 0.0 : 1.0, 0.0);
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_avg_order(const AvgOrderConfig& config) {
  const Stopwatch clock;
  const auto limits = sorted_unique(config.limits);
  if (limits.empty() || limits.front() < 16) throw DomainError("run_avg_order: limits must be >= 16");
  ExperimentReport report;
  report.experiment = "avg-order";
  report.params = {{"limits", limits},
                   {"alphas", config.alphas},
                   {"range", {config.range_lo, config.range_hi}},
                   {"spread_tolerance", config.spread_tolerance},
                   {"residual_bound", config.residual_bound},
                   {"alpha_below_1", "exploratory: ratio only, no error term asserted"}};

  const auto table = obtain_table(limits.back(), config.source);
  std::vector<arith::OmegaHistogram> histograms;
  for (auto x : limits) histograms.push_back(arith::count_omega_classes(table, x));

  const double mid = 0.5 * (config.range_lo + config.range_hi);
  const double half = 0.5 * (config.range_hi - config.range_lo);
  for (double alpha : config.alphas) {
    const std::string series = tag({{"alpha", num(alpha)}});
    std::vector<double> residuals;
    for (std::size_t i = 0; i < limits.size(); ++i) {
      const double x = static_cast<double>(limits[i]);
      const std::string at = "@" + std::to_string(limits[i]);
      const double s = arith::sum_omega_power(histograms[i], alpha);
      const double ll = std::log(std::log(x));
      report.info("sum" + series + at, s);
      report.info("ratio" + series + at, s / (x * std::pow(ll, alpha)));
      if (alpha < 1.0) continue;
      const auto prediction = asymptotics::prop41_prediction(x, alpha);
      const double r = (s - prediction.main) / prediction.error_scale;
      residuals.push_back(r);
      report.info("residual" + series + at, r);
      report.check("abs_residual" + series + at, std::abs(r), config.residual_bound);
      if (alpha == 1.0) report.check("range_deviation" + series + at, std::abs(r - mid), half);
    }
    if (alpha == 1.0 && residuals.size() > 1) {
      const auto [lo, hi] = std::minmax_element(residuals.begin(), residuals.end());
      const double spread = *lo > 0.0 ? *hi / *lo - 1.0 : std::numeric_limits<double>::infinity();
      report.check("spread" + series, spread, config.spread_tolerance);
    }
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_nk_compare(const NkConfig& config) {
  const Stopwatch clock;
  ExperimentReport report;
  report.experiment = "nk";
  report.params = {{"limit", config.limit},
                   {"k", config.ks},
                   {"tolerance", config.tolerance},
                   {"prime_cutoff", config.prime_cutoff}};
  const auto table = obtain_table(config.limit, config.source);
  const auto histogram = arith::count_omega_classes(table, config.limit);
  const asymptotics::NuProduct nu({config.prime_cutoff, true});
  const double x = static_cast<double>(config.limit);
  auto sieve_count = [&](int k) {
    return k >= 0 && static_cast<std::size_t>(k) < histogram.counts.size()
               ? static_cast<double>(histogram.counts[static_cast<std::size_t>(k)])
               : 0.0;
  };

  for (int k : sorted_unique(config.ks)) {
    const std::string at = "@" + std::to_string(k);
    const double counted = sieve_count(k);
    const double predicted = asymptotics::sathe_selberg_Nk(x, k, nu);
    report.info("sieve" + at, counted);
    report.info("predicted" + at, predicted);
    report.check("rel_error" + at, std::abs(predicted / counted - 1.0), config.tolerance);
    report.info("error_scale" + at, asymptotics::sathe_selberg_error_scale(x, k));
  }
  report.info("k1_predicted_over_sieve", asymptotics::sathe_selberg_Nk(x, 1, nu) / sieve_count(1));

  // Location of the maximum over the k the predictor accepts.
  const double ll = std::log(std::log(x));
  int best_predicted = 1;
  int best_sieve = 1;
  for (int k = 1; (k - 1) / ll < 2.0; ++k) {
    if (asymptotics::sathe_selberg_Nk(x, k, nu) > asymptotics::sathe_selberg_Nk(x, best_predicted, nu)) {
      best_predicted = k;
    }
    if (sieve_count(k) > sieve_count(best_sieve)) best_sieve = k;
  }
  report.info("argmax_k_predicted", best_predicted);
  report.info("argmax_k_sieve", best_sieve);
  report.info("log_log_x", ll);
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_ek(const EkConfig& config) {
  const Stopwatch clock;
  if (config.reference_limit < arith::kErdosKacMinIndex || config.reference_limit >= config.limit) {
    throw DomainError("run_ek: need 16 <= reference limit < limit");
  }
  ExperimentReport report;
  report.experiment = "ek";
  report.params = {{"limit", config.limit},
                   {"reference_limit", config.reference_limit},
                   {"n_min", arith::kErdosKacMinIndex},
                   {"tolerance", config.tolerance},
                   {"tolerance_origin", "empirical"}};
  const auto table = obtain_table(config.limit, config.source);
  auto samples = arith::erdos_kac_samples(table);
  samples.resize(config.limit - arith::kErdosKacMinIndex + 1);
  const std::span<const double> all(samples);
  const auto reference = all.first(config.reference_limit - arith::kErdosKacMinIndex + 1);

  const double ks = asymptotics::ks_statistic(all);
  const double ks_ref = asymptotics::ks_statistic(reference);
  report.check("ks@" + std::to_string(config.limit), ks, config.tolerance);
  report.info("ks@" + std::to_string(config.reference_limit), ks_ref);
  report.check("ks_change", ks - ks_ref, kBelowZero);

  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / samples.size();
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  report.info("sample_mean", mean);
  report.info("sample_stddev", std::sqrt(var / samples.size()));

  const std::vector<double> constant(1000, 0.0);
  report.check("constant_self_test", 0.5 - asymptotics::ks_statistic(constant), 0.0);
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_lemma32(const Lemma32Config& config) {
  const Stopwatch clock;
  ExperimentReport report;
  report.experiment = "lemma32";
  report.params = {{"log_n", config.log_n},
                   {"alphas", config.alphas},
                   {"j", config.js},
                   {"error_constant", config.error_constant},
                   {"monotone_from", config.monotone_from},
                   {"tail_constant", config.tail_constant},
                   {"rel_tol", asymptotics::kLemmaRelTol},
                   {"abs_tol", asymptotics::kLemmaAbsTol}};
  const auto log_ns = sorted_unique(config.log_n);
  for (int j : config.js) {
    for (double alpha : config.alphas) {
      const std::string series = tag({{"j", std::to_string(j)}, {"alpha", num(alpha)}});
      double previous = std::numeric_limits<double>::infinity();
      int violations = 0;
      for (double big_l : log_ns) {
        const std::string at = "@" + num(std::log(big_l));
        const double integral = asymptotics::lemma32_integral(big_l, alpha, j);
        report.info("integral" + series + at, integral);

        const double log_j_n = asymptotics::iter_log_plus(j - 1, big_l);
        if (log_j_n > 0.0) {
          const double ratio = integral / asymptotics::lemma32_asymptotic(big_l, alpha, j);
          const double error = std::abs(ratio - 1.0);
          report.info("ratio" + series + at, ratio);
          report.check("ratio_error" + series + at, error, config.error_constant / log_j_n);
          if (std::log(big_l) >= config.monotone_from) {
            if (!(error < previous)) ++violations;
            previous = error;
          }
        }

        if (big_l >= 1.0) {
          const double root = std::sqrt(big_l);
          const double tail = asymptotics::lemma32_partial(big_l, alpha, j, 1.0 / root, 1.0);
          report.check("tail_ratio" + series + at, tail / (config.tail_constant * std::exp(-root) * root), 1.0);
        }
      }
      report.check("monotone_violations" + series, violations, 0.0);
    }
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_embedding(const EmbeddingConfig& config) {
  const Stopwatch clock;
  const auto lengths = sorted_unique(config.lengths);
  if (lengths.empty() || lengths.front() == 0) throw DomainError("run_embedding: lengths must be >= 1");
  if (config.trials < 1) throw DomainError("run_embedding: trials must be >= 1");
  ExperimentReport report;
  report.experiment = "embed";
  report.seed = config.seed;
  report.params = {{"weight", config.family.name()},
                   {"alpha", config.alpha},
                   {"j", config.j},
                   {"product_range", range_name(config.range)},
                   {"lengths", lengths},
                   {"trials", config.trials},
                   {"growth_tolerance", config.growth_tolerance},
                   {"grid", grid_json(config.grid)}};

  const spaces::BergmanSpec spec(config.alpha, config.j, spaces::Domain::kHalfPlane, config.range);
  const spaces::DiskGrid grid(spec, config.grid);
  const auto table = arith::build_factor_table(std::max<std::size_t>(lengths.back(), 2));
  double previous_max = 0.0;
  for (std::size_t n : lengths) {
    const spaces::HalfplaneNormBatch batch(grid, n);
    if (n == lengths.front()) report.info("delta_norm_sq", batch.norm_sq(DirichletPoly::delta()));
    const CounterRng base(config.seed, n);
    double max_ratio = 0.0;
    double sum = 0.0;
    for (int t = 0; t < config.trials; ++t) {
      auto rng = base.substream(static_cast<std::uint64_t>(t));
      const auto f = random_unit_poly(rng, n, config.family, table);
      const double ratio = std::sqrt(batch.norm_sq(f));
      max_ratio = std::max(max_ratio, ratio);
      sum += ratio;
    }
    const std::string at = "@" + std::to_string(n);
    report.info("max_ratio" + at, max_ratio);
    report.info("mean_ratio" + at, sum / config.trials);
    if (previous_max > 0.0) report.check("growth" + at, max_ratio / previous_max - 1.0, config.growth_tolerance);
    previous_max = max_ratio;
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport gh_membership_check(const DirichletPoly& phi, const GhCheckConfig& config) {
  const Stopwatch clock;
  if (!(config.epsilon > 0.0)) throw DomainError("gh_membership_check: epsilon must be > 0");
  if (config.grid_n < 1) throw DomainError("gh_membership_check: grid_n must be >= 1");
  ExperimentReport report;
  report.experiment = "gh-check";
  report.params = {{"epsilon", config.epsilon},
                   {"t_max", config.t_max},
                   {"grid_n", config.grid_n},
                   {"symbol_length", phi.size()},
                   {"method", "HEURISTIC grid scan of Re phi on sigma = epsilon; a pass is evidence, not proof"}};
  double min_re = std::numeric_limits<double>::infinity();
  for (int i = 0; i < config.grid_n; ++i) {
    const double t =
        config.grid_n == 1 ? 0.0 : -config.t_max + 2.0 * config.t_max * i / (config.grid_n - 1);
    min_re = std::min(min_re, dirichlet::evaluate(phi, {config.epsilon, t}).real());
  }
  double l1 = 0.0;
  for (std::size_t n = 2; n <= phi.size(); ++n) l1 += std::abs(phi.coefficient(n));
  report.info("min_re", min_re);
  report.info("l1_margin", phi.coefficient(1).real() - 0.5 - l1);
  report.check("violation", 0.5 - min_re, kBelowZero);
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_composition(const CompositionConfig& config) {
  const Stopwatch clock;
  const auto lengths = sorted_unique(config.lengths);
  if (lengths.empty() || lengths.front() == 0) throw DomainError("run_composition: lengths must be >= 1");
  if (config.fixtures.empty()) throw DomainError("run_composition: need at least one fixture");
  if (config.trials < 1 || config.iterations < 1) throw DomainError("run_composition: trials, iterations >= 1");
  ExperimentReport report;
  report.experiment = "compose";
  report.seed = config.seed;
  nlohmann::ordered_json fixtures = nlohmann::ordered_json::array();
  for (const auto& fx : config.fixtures) {
    nlohmann::ordered_json higher = nlohmann::ordered_json::array();
    for (const auto& c : fx.higher()) higher.push_back({c.real(), c.imag()});
    fixtures.push_back({{"c1", {fx.c1().real(), fx.c1().imag()}}, {"higher", higher}});
  }
  report.params = {{"weight_in", config.in.name()},
                   {"weight_out", config.out.name()},
                   {"lengths", lengths},
                   {"trials", config.trials},
                   {"iterations", config.iterations},
                   {"growth_tolerance", config.growth_tolerance},
                   {"fixtures", fixtures}};

  for (std::size_t i = 0; i < config.fixtures.size(); ++i) {
    const auto& fx = config.fixtures[i];
    const std::string series = tag({{"fixture", std::to_string(i)}});
    const auto gh = gh_membership_check(fx.symbol(), {});
    report.check("gh_violation" + series, gh.find("violation")->value, kBelowZero);
    const double t = std::abs(spaces::tau(fx.c1()));
    report.info("automorphism_factor" + series, (1.0 + t) / (1.0 - t));
  }

  const auto table = arith::build_factor_table(std::max<std::size_t>(lengths.back(), 2));
  std::vector<double> previous(static_cast<std::size_t>(config.iterations), 0.0);
  for (std::size_t n : lengths) {
    std::vector<double> max_ratio(previous.size(), 0.0);
    std::vector<double> sum(previous.size(), 0.0);
    for (std::size_t i = 0; i < config.fixtures.size(); ++i) {
      const auto phi = config.fixtures[i].symbol();
      const CounterRng base(config.seed, n * 1000 + i);
      for (int t = 0; t < config.trials; ++t) {
        auto rng = base.substream(static_cast<std::uint64_t>(t));
        auto g = random_unit_poly(rng, n, config.in, table);
        for (int it = 0; it < config.iterations; ++it) {
          g = dirichlet::compose_zero_c0(g, phi, n);
          const double ratio = std::sqrt(spaces::hw_norm_sq(g, raise_level(config.out, it), table));
          max_ratio[it] = std::max(max_ratio[it], ratio);
          sum[it] += ratio;
        }
      }
    }
    const std::string at = "@" + std::to_string(n);
    const double count = static_cast<double>(config.trials * config.fixtures.size());
    for (std::size_t it = 0; it < previous.size(); ++it) {
      const std::string series = tag({{"iter", std::to_string(it + 1)}});
      report.info("max_ratio" + series + at, max_ratio[it]);
      report.info("mean_ratio" + series + at, sum[it] / count);
      report.info("max_minus_one" + series + at, max_ratio[it] - 1.0);
      if (previous[it] > 0.0) {
        report.check("growth" + series + at, max_ratio[it] / previous[it] - 1.0, config.growth_tolerance);
      }
      previous[it] = max_ratio[it];
    }
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_subordination(const SubordinationConfig& config) {
  const Stopwatch clock;
  if (config.trials < 1) throw DomainError("run_subordination: trials must be >= 1");
  if (!(config.max_shift > 0.0 && config.max_shift < 1.0)) {
    throw DomainError("run_subordination: max_shift must lie in (0, 1)");
  }
  ExperimentReport report;
  report.experiment = "subord";
  report.seed = config.seed;
  report.params = {{"alpha", config.alpha},
                   {"j", config.j},
                   {"product_range", range_name(config.range)},
                   {"trials", config.trials},
                   {"degree", config.degree},
                   {"max_shift", config.max_shift},
                   {"identity_tolerance", config.identity_tolerance},
                   {"tolerance", config.tolerance},
                   {"grid", grid_json(config.grid)}};
  const spaces::BergmanSpec spec(config.alpha, config.j, spaces::Domain::kDisk, config.range);
  const spaces::DiskGrid grid(spec, config.grid);
  const auto identity = [](Complex z) { return z; };

  double identity_diff = 0.0;
  double excess = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < config.trials; ++t) {
    auto rng = CounterRng(config.seed, 1).substream(static_cast<std::uint64_t>(t));
    const auto c = random_taylor(rng, config.degree);
    const spaces::DiskFunction f = [&c](Complex z) { return eval_taylor(c, z); };
    const auto same = spaces::subordination_pair(f, identity, spec, grid);
    identity_diff = std::max(identity_diff, std::abs(same.lhs - same.rhs) / same.rhs);
    const auto sub = spaces::subordination_pair(f, zero_fixing_map(random_disk_point(rng, config.max_shift)), spec, grid);
    excess = std::max(excess, sub.lhs / sub.rhs - 1.0);
  }
  report.check("identity_rel_diff", identity_diff, config.identity_tolerance);
  report.check("zero_fixing_excess", excess, config.tolerance);

  // omega(0) = a != 0: the observed constant against (1 + |a|) / (1 - |a|), reported only.
  const int shifted_trials = std::max(1, config.trials / 10);
  for (double radius : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double worst = 0.0;
    for (int t = 0; t < shifted_trials; ++t) {
      auto rng = CounterRng(config.seed, 2).substream(static_cast<std::uint64_t>(t));
      const auto c = random_taylor(rng, config.degree);
      const spaces::DiskFunction f = [&c](Complex z) { return eval_taylor(c, z); };
      const auto pair = spaces::subordination_pair(f, shifted_automorphism(std::polar(radius, 2.0 * t)), spec, grid);
      worst = std::max(worst, pair.lhs / pair.rhs);
    }
    report.info("shifted_ratio@" + num(radius), worst);
    report.info("shifted_bound@" + num(radius), (1.0 + radius) / (1.0 - radius));
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_norm_equivalence(const NormEquivalenceConfig& config) {
  const Stopwatch clock;
  const auto degrees = sorted_unique(config.degrees);
  if (degrees.empty()) throw DomainError("run_norm_equivalence: need at least one degree");
  if (config.polys < 1) throw DomainError("run_norm_equivalence: polys must be >= 1");
  ExperimentReport report;
  report.experiment = "equiv";
  report.seed = config.seed;
  report.params = {{"alphas", config.alphas},
                   {"j", config.js},
                   {"degrees", degrees},
                   {"polys", config.polys},
                   {"span_tolerance", config.span_tolerance},
                   {"stability_tolerance", config.stability_tolerance},
                   {"bracket", "min/max of ||z^n||^2 / coefficient weight over n <= degree"},
                   {"product_range", range_name(config.range)},
                   {"grid", grid_json(config.grid)}};
  // Both norms are diagonal in z^n, so the ratio over all polynomials of degree <= D
  // ranges exactly over the per-monomial ratios; random polynomials must land inside.
  constexpr double kInsideSlack = 1e-12;
  std::uint64_t stream = 0;
  for (double alpha : config.alphas) {
    for (int j : config.js) {
      const std::string series = tag({{"alpha", num(alpha)}, {"j", std::to_string(j)}});
      const spaces::BergmanSpec spec(alpha, j, spaces::Domain::kDisk, config.range);
      const spaces::DiskGrid grid(spec, config.grid);
      const auto moments = grid.monomial_norms_sq(degrees.back() + 1);
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      double previous_lo = 0.0;
      double previous_hi = 0.0;
      double sample_previous_lo = 0.0;
      double sample_previous_hi = 0.0;
      std::size_t next = 0;
      int outside = 0;
      for (std::size_t degree : degrees) {
        for (; next <= degree; ++next) {
          std::vector<Complex> basis(next + 1, 0.0);
          basis[next] = 1.0;
          const double rho = moments[next] / spaces::coeff_norm_sq(basis, spec);
          lo = std::min(lo, rho);
          hi = std::max(hi, rho);
        }
        const CounterRng base(config.seed, stream++);
        double sample_lo = std::numeric_limits<double>::infinity();
        double sample_hi = 0.0;
        for (int p = 0; p < config.polys; ++p) {
          auto rng = base.substream(static_cast<std::uint64_t>(p));
          const auto c = random_taylor(rng, degree);
          const double disk = spaces::disk_norm_sq([&c](Complex z) { return eval_taylor(c, z); }, spec, grid);
          const double ratio = disk / spaces::coeff_norm_sq(c, spec);
          sample_lo = std::min(sample_lo, ratio);
          sample_hi = std::max(sample_hi, ratio);
          if (ratio < lo * (1.0 - kInsideSlack) || ratio > hi * (1.0 + kInsideSlack)) ++outside;
        }
        const std::string at = "@" + std::to_string(degree);
        report.info("bracket_lo" + series + at, lo);
        report.info("bracket_hi" + series + at, hi);
        report.info("sample_min" + series + at, sample_lo);
        report.info("sample_max" + series + at, sample_hi);
        if (previous_hi > 0.0) {
          const double move = std::max(std::abs(hi / previous_hi - 1.0), std::abs(lo / previous_lo - 1.0));
          report.check("stability" + series + at, move, config.stability_tolerance);
          const double sample_move = std::max(std::abs(sample_hi / sample_previous_hi - 1.0),
                                              std::abs(sample_lo / sample_previous_lo - 1.0));
          report.info("sample_stability" + series + at, sample_move);
        }
        previous_lo = lo;
        previous_hi = hi;
        sample_previous_lo = sample_lo;
        sample_previous_hi = sample_hi;
      }
      report.check("span" + series, hi / lo, config.span_tolerance);
      report.check("samples_outside_bracket" + series, outside, 0.0);
    }
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_algebra_oracles(const AlgebraConfig& config) {
  const Stopwatch clock;
  if (config.n < 2) throw DomainError("run_algebra_oracles: n must be >= 2");
  ExperimentReport report;
  report.experiment = "algebra";
  report.seed = config.seed;
  report.params = {{"n", config.n},
                   {"alphas", config.alphas},
                   {"exp_log_tolerance", config.exp_log_tolerance},
                   {"d_alpha_tolerance", config.d_alpha_tolerance},
                   {"coefficients", "modulus uniform in [0.5, 2], uniform phase"}};

  CounterRng rng(config.seed, 0);
  const auto f = random_annulus_poly(rng, config.n);
  const auto log_f = dirichlet::log_series(f);
  const auto round_trip = dirichlet::exp_series(log_f);
  double worst = 0.0;
  for (std::size_t n = 1; n <= config.n; ++n) {
    worst = std::max(worst, std::abs(round_trip.coefficient(n) - f.coefficient(n)) / std::abs(f.coefficient(n)));
  }
  report.check("exp_log_max_rel", worst, config.exp_log_tolerance);
  // Large log coefficients mean exp rebuilds O(1) values from much larger terms.
  double log_size = 0.0;
  for (const auto& c : log_f.coefficients()) log_size = std::max(log_size, std::abs(c));
  report.info("max_abs_log_coefficient", log_size);

  const auto table = arith::build_factor_table(config.n);
  const auto log_zeta = dirichlet::log_series(DirichletPoly::zeta(config.n));
  for (double alpha : config.alphas) {
    const auto power = dirichlet::exp_series(log_zeta.scaled(alpha));
    double err = 0.0;
    for (std::size_t n = 1; n <= config.n; ++n) {
      const double exact = arith::d_alpha(n, alpha, table);
      err = std::max(err, std::abs(power.coefficient(n) - exact) / std::abs(exact));
    }
    report.check("d_alpha_max_rel@" + num(alpha), err, config.d_alpha_tolerance);
  }
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

ExperimentReport run_twist_identity(const TwistConfig& config) {
  const Stopwatch clock;
  if (config.trials < 1 || config.n < 1 || config.symbol_length < 1) {
    throw DomainError("run_twist_identity: trials, n and symbol length must be >= 1");
  }
  ExperimentReport report;
  report.experiment = "twist";
  report.seed = config.seed;
  report.params = {{"trials", config.trials},
                   {"n", config.n},
                   {"symbol_length", config.symbol_length},
                   {"tolerance", config.tolerance}};
  const std::size_t primes = arith::primes_up_to(std::max(config.n, config.symbol_length)).size();
  double worst = 0.0;
  double largest = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    auto rng = CounterRng(config.seed, 0).substream(static_cast<std::uint64_t>(t));
    std::vector<Complex> a(config.n);
    for (auto& c : a) c = rng.complex_normal();
    const DirichletPoly f(std::move(a));
    const auto phi = GhFixture::random(rng, config.symbol_length).symbol();
    const auto chi = random_character(rng, primes);
    const auto lhs = dirichlet::twist(dirichlet::compose_zero_c0(f, phi, config.n), chi);
    const auto rhs = dirichlet::compose_zero_c0(f, dirichlet::twist(phi, chi), config.n);
    for (std::size_t n = 1; n <= config.n; ++n) {
      worst = std::max(worst, std::abs(lhs.coefficient(n) - rhs.coefficient(n)));
      largest = std::max(largest, std::abs(lhs.coefficient(n)));
    }
  }
  report.check("max_abs_discrepancy", worst, config.tolerance);
  report.info("max_abs_coefficient", largest);
  report.walltime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace dlab::harness
