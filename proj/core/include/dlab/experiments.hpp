#pragma once

// Reproducible experiments. Each run_* returns a report whose checked metrics
// carry their thresholds; metric names of the form "series@x" form plot series.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "dlab/arith.hpp"
#include "dlab/dirichlet.hpp"
#include "dlab/fixtures.hpp"
#include "dlab/report.hpp"
#include "dlab/spaces.hpp"

namespace dlab::harness {

/// Where Omega(n) comes from: a cache file if it covers the limit, else a fresh sieve.
struct TableSource {
  std::optional<std::filesystem::path> cache;
  arith::SieveOptions sieve;
};

arith::FactorTable obtain_table(std::uint64_t limit, const TableSource& source);

struct SieveConfig {
  std::uint64_t limit = 10'000'000;
  std::optional<std::filesystem::path> cache;
  arith::SieveOptions sieve;
};
ExperimentReport run_sieve(const SieveConfig& config);

struct AvgOrderConfig {
  std::vector<std::uint64_t> limits = {10'000, 100'000, 1'000'000, 10'000'000};
  std::vector<double> alphas = {1.0, 2.0};
  /// alpha = 1: the residual (S - X log log X) / X must lie in [range_lo, range_hi] ...
  double range_lo = 0.5;
  double range_hi = 2.0;
  /// ... and max/min - 1 over the limits may not exceed this.
  double spread_tolerance = 0.30;
  /// alpha >= 1: |S - X (log log X)^alpha| / (X (log log X)^{alpha-1}) <= this.
  double residual_bound = 3.0;
  TableSource source;
};
ExperimentReport run_avg_order(const AvgOrderConfig& config);

struct NkConfig {
  std::uint64_t limit = 10'000'000;
  std::vector<int> ks = {2, 3, 4};
  double tolerance = 0.25;
  std::uint64_t prime_cutoff = 1'000'000;
  TableSource source;
};
ExperimentReport run_nk_compare(const NkConfig& config);

struct EkConfig {
  std::uint64_t limit = 10'000'000;
  /// The KS distance at `limit` must be below the one at this smaller limit.
  std::uint64_t reference_limit = 10'000;
  double tolerance = 0.10;
  TableSource source;
};
ExperimentReport run_ek(const EkConfig& config);

struct Lemma32Config {
  /// Values of log n.
  std::vector<double> log_n = {20.085536923187668, 54.598150033144236, 148.4131591025766,
                               403.42879349273511, 1096.6331584284585, 2980.9579870417283};
  std::vector<double> alphas = {0.5, 1.0, 2.0};
  std::vector<int> js = {2};
  /// |I / asymptotic - 1| <= error_constant / log_j n.
  double error_constant = 5.0;
  /// Ratio errors must decrease in L once log L >= this.
  double monotone_from = 4.0;
  /// int_{1/sqrt L}^1 <= tail_constant e^{-sqrt L} sqrt L.
  double tail_constant = 10.0;
};
ExperimentReport run_lemma32(const Lemma32Config& config);

struct EmbeddingConfig {
  spaces::WeightFamily family = spaces::WeightFamily::generalized_divisor(1.0);
  double alpha = 1.0;
  int j = 1;
  spaces::ProductRange range = spaces::ProductRange::kToJMinus2;
  std::vector<std::size_t> lengths = {64, 128, 256, 512};
  int trials = 200;
  double growth_tolerance = 0.25;
  spaces::GridOptions grid = {64, 256};
  std::uint64_t seed = 0;
};
ExperimentReport run_embedding(const EmbeddingConfig& config);

struct CompositionConfig {
  std::vector<GhFixture> fixtures = {GhFixture::canonical()};
  spaces::WeightFamily in = spaces::WeightFamily::generalized_divisor(1.0);
  spaces::WeightFamily out = spaces::WeightFamily::omega_pow(1.0);
  std::vector<std::size_t> lengths = {256, 512};
  int trials = 200;
  /// Compositions F o phi o ... o phi; iteration i is measured with the out-weight's
  /// iterated-log level raised by i - 1.
  int iterations = 1;
  double growth_tolerance = 0.25;
  std::uint64_t seed = 0;
};
ExperimentReport run_composition(const CompositionConfig& config);

struct SubordinationConfig {
  double alpha = 1.0;
  int j = 1;
  spaces::ProductRange range = spaces::ProductRange::kToJMinus2;
  int trials = 100;
  std::size_t degree = 12;
  /// Self-maps use |a| <= max_shift.
  double max_shift = 0.9;
  double identity_tolerance = 1e-8;
  double tolerance = 1e-6;
  spaces::GridOptions grid;
  std::uint64_t seed = 0;
};
ExperimentReport run_subordination(const SubordinationConfig& config);

struct GhCheckConfig {
  double epsilon = 1e-3;
  double t_max = 100.0;
  int grid_n = 20001;
};
/// Scans Re phi on sigma = epsilon, |t| <= t_max. A heuristic: a pass is evidence, not proof.
ExperimentReport gh_membership_check(const DirichletPoly& phi, const GhCheckConfig& config);

struct NormEquivalenceConfig {
  std::vector<double> alphas = {0.5, 1.0, 2.0};
  std::vector<int> js = {1, 2, 3};
  std::vector<std::size_t> degrees = {50, 100, 200};
  int polys = 8;
  /// max ratio / min ratio over all degrees.
  double span_tolerance = 100.0;
  /// Relative move of either bracket end from one degree to the next.
  double stability_tolerance = 0.25;
  spaces::ProductRange range = spaces::ProductRange::kToJMinus2;
  spaces::GridOptions grid;
  std::uint64_t seed = 0;
};
ExperimentReport run_norm_equivalence(const NormEquivalenceConfig& config);

struct AlgebraConfig {
  std::size_t n = 10'000;
  std::vector<double> alphas = {0.5, 1.0, 2.0, 3.0};
  double exp_log_tolerance = 1e-12;
  double d_alpha_tolerance = 1e-9;
  std::uint64_t seed = 0;
};
ExperimentReport run_algebra_oracles(const AlgebraConfig& config);

struct TwistConfig {
  int trials = 100;
  std::size_t n = 256;
  std::size_t symbol_length = 16;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
};
/// (F o phi)_chi against F o phi_chi for random F, Gordon-Hedenmalm phi and characters chi.
ExperimentReport run_twist_identity(const TwistConfig& config);

}  // namespace dlab::harness
