#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dlab/errors.hpp"
#include "dlab/experiments.hpp"

using namespace dlab;
using namespace dlab::harness;

TEST(Rng, DeterministicAndSplittable) {
  CounterRng a(42, 3);
  CounterRng b(42, 3);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
  CounterRng c(42, 4);
  CounterRng d(43, 3);
  CounterRng e(42, 3);
  const auto first = e.next_u64();
  EXPECT_NE(c.next_u64(), first);
  EXPECT_NE(d.next_u64(), first);
  auto s1 = CounterRng(1).substream(0);
  auto s2 = CounterRng(1).substream(1);
  EXPECT_NE(s1.next_u64(), s2.next_u64());
}

TEST(Rng, Moments) {
  CounterRng rng(5);
  const int n = 200000;
  double mean = 0.0;
  double second = 0.0;
  double cmean = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double x = rng.normal();
    mean += x;
    second += x * x;
    cmean += std::norm(rng.complex_normal());
  }
  EXPECT_NEAR(mean / n, 0.0, 0.01);
  EXPECT_NEAR(second / n, 1.0, 0.02);
  EXPECT_NEAR(cmean / n, 1.0, 0.02);
}

TEST(Report, JsonRoundTripAndFlags) {
  ExperimentReport r;
  r.experiment = "demo";
  r.params = {{"n", 3}, {"tag", "x"}};
  r.seed = 99;
  r.check("small", 0.1, 0.2);
  r.check("big", 3.0, 1.0);
  r.info("curve@1", 0.5);
  r.info("missing", std::numeric_limits<double>::quiet_NaN());
  r.walltime_ms = 12.5;
  const auto back = report_from_json(to_json(r));
  EXPECT_EQ(to_json(back), to_json(r));
  EXPECT_TRUE(back.flags_consistent());
  EXPECT_FALSE(back.all_pass());
  EXPECT_TRUE(std::isnan(back.find("missing")->value));
  EXPECT_EQ(back.find("big")->pass, std::optional<bool>(false));
  const auto plain = nlohmann::ordered_json::parse(to_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : plain.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"experiment", "version", "params", "seed", "metrics", "walltime_ms"}));
  EXPECT_FALSE(nlohmann::ordered_json::parse(to_json(r, false)).contains("walltime_ms"));
}

TEST(Report, TamperedFlagIsDetected) {
  ExperimentReport r;
  r.metrics.push_back({"m", 2.0, 1.0, true});
  EXPECT_FALSE(r.flags_consistent());
}

TEST(Report, CsvAndPlotdata) {
  ExperimentReport r;
  r.experiment = "demo";
  r.check("a,b", 1.0, 2.0);
  r.info("s@1", 0.25);
  r.info("s@2", 0.5);
  const auto csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "experiment,name,value,tolerance,pass");
  EXPECT_NE(csv.find("demo,\"a,b\",1.0,2.0,true"), std::string::npos);
  EXPECT_NE(csv.find("demo,s@1,0.25,,"), std::string::npos);
  const auto plot = to_plotdata(r);
  EXPECT_NE(plot.find("# s\n1 0.25\n2 0.5\n"), std::string::npos);
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_THROW(parse_format("xml"), DomainError);
}

TEST(GhCheck, Examples) {
  const auto constant = gh_membership_check(DirichletPoly({1.5}), {});
  EXPECT_DOUBLE_EQ(constant.find("min_re")->value, 1.5);
  EXPECT_TRUE(constant.all_pass());
  EXPECT_FALSE(gh_membership_check(DirichletPoly({0.4}), {}).all_pass());
  const auto canonical = gh_membership_check(GhFixture::canonical().symbol(), {});
  EXPECT_TRUE(canonical.all_pass());
  EXPECT_GE(canonical.find("min_re")->value - 0.5, 0.75);
  EXPECT_THROW(gh_membership_check(DirichletPoly({1.5}), {0.0, 1.0, 10}), DomainError);
}

TEST(GhFixture, MarginAndRandomFixtures) {
  EXPECT_THROW(GhFixture(1.0, {0.6}), DomainError);
  EXPECT_DOUBLE_EQ(GhFixture::canonical().margin(), 0.75);
  CounterRng rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto fx = GhFixture::random(rng, 12);
    EXPECT_GT(fx.margin(), 0.0);
    EXPECT_TRUE(gh_membership_check(fx.symbol(), {1e-3, 50.0, 2001}).all_pass());
  }
}

TEST(Fixtures, UnitPolyAndWeightPairs) {
  const auto table = arith::build_factor_table(64);
  CounterRng rng(1);
  const auto family = spaces::WeightFamily::generalized_divisor(1.0);
  EXPECT_NEAR(spaces::hw_norm_sq(random_unit_poly(rng, 64, family, table), family, table), 1.0, 1e-13);
  EXPECT_EQ(canonical_weight_pair(1, 2.0).in, spaces::WeightFamily::generalized_divisor(2.0));
  EXPECT_EQ(canonical_weight_pair(1, 2.0).out, spaces::WeightFamily::omega_pow(2.0));
  EXPECT_EQ(canonical_weight_pair(2, 1.0).in, spaces::WeightFamily::omega_pow(1.0));
  EXPECT_EQ(canonical_weight_pair(2, 1.0).out, spaces::WeightFamily::iter_log_omega(1, 1.0));
  const auto w = zero_fixing_map({0.3, 0.4});
  EXPECT_EQ(w(0.0), Complex(0.0));
  EXPECT_NEAR(std::abs(shifted_automorphism({0.3, 0.4})(0.0) - Complex(0.3, 0.4)), 0.0, 1e-16);
}

TEST(Composition, ConstantSymbolCase) {
  const auto table = arith::build_factor_table(8);
  const auto out = dirichlet::compose_zero_c0(DirichletPoly::monomial(2, 1.0, 8), DirichletPoly({1.5}), 8);
  EXPECT_NEAR(spaces::hw_norm_sq(out, spaces::WeightFamily::omega_pow(1.0), table), 0.125, 1e-15);
}

TEST(Embedding, DeltaHasUnitNorm) {
  EmbeddingConfig c;
  c.lengths = {4, 8};
  c.trials = 3;
  c.grid = {16, 32};
  const auto r = run_embedding(c);
  EXPECT_NEAR(r.find("delta_norm_sq")->value, 1.0, 1e-8);
  EXPECT_TRUE(r.flags_consistent());
}

TEST(Determinism, SameSeedSameBytes) {
  TwistConfig t;
  t.trials = 5;
  t.n = 64;
  t.seed = 17;
  EXPECT_EQ(to_json(run_twist_identity(t), false), to_json(run_twist_identity(t), false));
  SubordinationConfig s;
  s.trials = 4;
  s.grid = {16, 32};
  s.seed = 3;
  EXPECT_EQ(to_json(run_subordination(s), false), to_json(run_subordination(s), false));
  CompositionConfig c;
  c.lengths = {16, 32};
  c.trials = 5;
  c.seed = 8;
  const auto a = to_json(run_composition(c), false);
  EXPECT_EQ(a, to_json(run_composition(c), false));
  c.seed = 9;
  EXPECT_NE(a, to_json(run_composition(c), false));
}

TEST(Experiments, TableSourceUsesLargerCache) {
  const auto path = std::filesystem::temp_directory_path() / "dlab_test_source.bin";
  arith::save_cache(arith::build_factor_table(5000), path);
  TableSource source;
  source.cache = path;
  EXPECT_EQ(obtain_table(1000, source).limit(), 5000u);
  EXPECT_EQ(obtain_table(9000, source).limit(), 9000u);
  std::filesystem::remove(path);
}
