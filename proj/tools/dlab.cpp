// dlab: command line front end for the experiments in dlab/experiments.hpp.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/errors.hpp"
#include "dlab/experiments.hpp"

namespace {

using namespace dlab;
using namespace dlab::harness;

struct Globals {
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "json";
  std::string product_range = "definition";
  std::string cache;
  unsigned threads = 1;
  bool strict = false;
};

// "1e7" style counts; CLI11 will not read those into integers itself.
std::uint64_t count_from(const std::string& text) {
  std::size_t used = 0;
  const double x = std::stod(text, &used);
  if (used != text.size() || !(x >= 0.0) || x != std::floor(x) || x > 1.8e19) {
    throw DomainError("not a non-negative integer: '" + text + "'");
  }
  return static_cast<std::uint64_t>(x);
}

std::vector<std::uint64_t> counts_from(const std::vector<std::string>& texts) {
  std::vector<std::uint64_t> out;
  for (const auto& t : texts) out.push_back(count_from(t));
  return out;
}

// "e5" means e^5.
double log_n_from(const std::string& text) {
  if (!text.empty() && text[0] == 'e') return std::exp(std::stod(text.substr(1)));
  return std::stod(text);
}

spaces::ProductRange range_from(const std::string& name) {
  if (name == "definition") return spaces::ProductRange::kToJMinus2;
  if (name == "extended") return spaces::ProductRange::kToJMinus1;
  throw DomainError("unknown product range '" + name + "' (definition or extended)");
}

TableSource source_from(const Globals& g) {
  TableSource source;
  if (!g.cache.empty()) source.cache = g.cache;
  source.sieve.threads = g.threads;
  return source;
}

DirichletPoly read_symbol(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return dirichlet::from_json(buf.str());
}

GhFixture fixture_from(const DirichletPoly& phi) {
  const auto c = phi.coefficients();
  return GhFixture(c[0], std::vector<Complex>(c.begin() + 1, c.end()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dlab: numerical experiments on Dirichlet series, weighted spaces and composition"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; subcommand keys go under [name] sections");

  Globals g;
  app.add_option("--seed", g.seed, "Seed for the counter-based generator");
  app.add_option("--out", g.out, "Output path, '-' for stdout");
  app.add_option("--format", g.format, "json, csv or plotdata")->check(CLI::IsMember({"json", "csv", "plotdata"}));
  app.add_option("--product-range", g.product_range, "Iterated-log product in the disk weight: definition or extended")
      ->check(CLI::IsMember({"definition", "extended"}));
  app.add_option("--cache", g.cache, "Omega table cache used when it covers the limit");
  app.add_option("--threads", g.threads, "Sieve threads");
  app.add_flag("--strict", g.strict, "Exit with status 1 if any checked metric fails");

  ExperimentReport report;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  // sieve
  std::string sieve_limit = "1e7";
  std::uint64_t segment = 0;
  auto* s = sub("sieve", "Build the Omega table, optionally writing the cache");
  s->add_option("--limit", sieve_limit);
  s->add_option("--segment", segment, "Segment size, 0 for the linear sieve");
  s->callback([&] {
    SieveConfig c;
    c.limit = count_from(sieve_limit);
    if (!g.cache.empty()) c.cache = g.cache;
    c.sieve = {segment, g.threads};
    report = run_sieve(c);
  });

  // avg-order
  AvgOrderConfig avg;
  std::vector<std::string> avg_limits = {"1e4", "1e5", "1e6", "1e7"};
  auto* a = sub("avg-order", "Partial sums of Omega(n)^alpha against X (log log X)^alpha");
  a->add_option("--limits", avg_limits)->delimiter(',');
  a->add_option("--alphas", avg.alphas)->delimiter(',');
  a->add_option("--range-lo", avg.range_lo);
  a->add_option("--range-hi", avg.range_hi);
  a->add_option("--spread-tolerance", avg.spread_tolerance);
  a->add_option("--residual-bound", avg.residual_bound);
  a->callback([&] {
    avg.limits = counts_from(avg_limits);
    avg.source = source_from(g);
    report = run_avg_order(avg);
  });

  // nk
  NkConfig nk;
  std::string nk_limit = "1e7";
  std::string nk_cutoff = "1e6";
  auto* n = sub("nk", "Sathe-Selberg predictor against sieved N_k(X)");
  n->add_option("--limit", nk_limit);
  n->add_option("--k", nk.ks)->delimiter(',');
  n->add_option("--tolerance", nk.tolerance);
  n->add_option("--prime-cutoff", nk_cutoff);
  n->callback([&] {
    nk.limit = count_from(nk_limit);
    nk.prime_cutoff = count_from(nk_cutoff);
    nk.source = source_from(g);
    report = run_nk_compare(nk);
  });

  // ek
  EkConfig ek;
  std::string ek_limit = "1e7";
  std::string ek_ref = "1e4";
  auto* e = sub("ek", "Kolmogorov-Smirnov distance of normalized Omega(n) from N(0, 1)");
  e->add_option("--limit", ek_limit);
  e->add_option("--reference", ek_ref);
  e->add_option("--tolerance", ek.tolerance);
  e->callback([&] {
    ek.limit = count_from(ek_limit);
    ek.reference_limit = count_from(ek_ref);
    ek.source = source_from(g);
    report = run_ek(ek);
  });

  // lemma32
  Lemma32Config lem;
  std::vector<std::string> lem_logn = {"e3", "e4", "e5", "e6", "e7", "e8"};
  auto* l = sub("lemma32", "Quadrature of the iterated-log integral against its asymptotic");
  l->add_option("--j", lem.js)->delimiter(',');
  l->add_option("--alpha", lem.alphas)->delimiter(',');
  l->add_option("--logn", lem_logn, "Values of log n; eK means e^K")->delimiter(',');
  l->add_option("--error-constant", lem.error_constant);
  l->add_option("--tail-constant", lem.tail_constant);
  l->callback([&] {
    lem.log_n.clear();
    for (const auto& t : lem_logn) lem.log_n.push_back(log_n_from(t));
    report = run_lemma32(lem);
  });

  // embed
  EmbeddingConfig emb;
  std::string emb_weight = "gdiv:1";
  auto* em = sub("embed", "Half-plane norms of random unit-norm Dirichlet polynomials");
  em->add_option("--weight", emb_weight, "unit, dpow:a, gdiv:a, omega:a or iterlog:j:a");
  em->add_option("--alpha", emb.alpha);
  em->add_option("--j", emb.j);
  em->add_option("--lengths", emb.lengths)->delimiter(',');
  em->add_option("--trials", emb.trials);
  em->add_option("--radial", emb.grid.radial);
  em->add_option("--angular", emb.grid.angular);
  em->add_option("--growth-tolerance", emb.growth_tolerance);
  em->callback([&] {
    emb.family = spaces::WeightFamily::parse(emb_weight);
    emb.range = range_from(g.product_range);
    emb.seed = g.seed;
    report = run_embedding(emb);
  });

  // compose
  CompositionConfig comp;
  std::string comp_in = "gdiv:1";
  std::string comp_out = "omega:1";
  std::string comp_symbol;
  std::size_t random_fixtures = 0;
  std::size_t fixture_length = 8;
  auto* co = sub("compose", "Weighted norms of F o phi for unit-norm F");
  co->add_option("--weight-in", comp_in);
  co->add_option("--weight-out", comp_out);
  co->add_option("--symbol", comp_symbol, "JSON symbol file ([re, im] pairs from n = 1)");
  co->add_option("--random-fixtures", random_fixtures, "Add this many seeded random symbols");
  co->add_option("--fixture-length", fixture_length);
  co->add_option("--lengths", comp.lengths)->delimiter(',');
  co->add_option("--trials", comp.trials);
  co->add_option("--iterations", comp.iterations);
  co->add_option("--growth-tolerance", comp.growth_tolerance);
  co->callback([&] {
    comp.in = spaces::WeightFamily::parse(comp_in);
    comp.out = spaces::WeightFamily::parse(comp_out);
    if (!comp_symbol.empty()) comp.fixtures = {fixture_from(read_symbol(comp_symbol))};
    CounterRng rng(g.seed, 0xF1);
    for (std::size_t i = 0; i < random_fixtures; ++i) comp.fixtures.push_back(GhFixture::random(rng, fixture_length));
    comp.seed = g.seed;
    report = run_composition(comp);
  });

  // subord
  SubordinationConfig subc;
  auto* su = sub("subord", "Disk norm of f o omega against f");
  su->add_option("--alpha", subc.alpha);
  su->add_option("--j", subc.j);
  su->add_option("--trials", subc.trials);
  su->add_option("--degree", subc.degree);
  su->add_option("--max-shift", subc.max_shift);
  su->add_option("--radial", subc.grid.radial);
  su->add_option("--angular", subc.grid.angular);
  su->callback([&] {
    subc.range = range_from(g.product_range);
    subc.seed = g.seed;
    report = run_subordination(subc);
  });

  // gh-check
  GhCheckConfig ghc;
  std::string gh_symbol;
  double gh_constant = std::nan("");
  auto* gh = sub("gh-check", "HEURISTIC grid scan of Re phi on a vertical line");
  gh->add_option("--symbol", gh_symbol, "JSON symbol file");
  gh->add_option("--constant", gh_constant, "Use phi = this constant instead");
  gh->add_option("--epsilon", ghc.epsilon);
  gh->add_option("--t-max", ghc.t_max);
  gh->add_option("--grid-n", ghc.grid_n);
  gh->callback([&] {
    DirichletPoly phi = GhFixture::canonical().symbol();
    if (!gh_symbol.empty()) phi = read_symbol(gh_symbol);
    if (!std::isnan(gh_constant)) phi = DirichletPoly({Complex(gh_constant, 0.0)});
    report = gh_membership_check(phi, ghc);
  });

  // equiv
  NormEquivalenceConfig eq;
  auto* eqc = sub("equiv", "Disk quadrature norm against the coefficient norm");
  eqc->add_option("--alphas", eq.alphas)->delimiter(',');
  eqc->add_option("--j", eq.js)->delimiter(',');
  eqc->add_option("--degrees", eq.degrees)->delimiter(',');
  eqc->add_option("--polys", eq.polys);
  eqc->add_option("--radial", eq.grid.radial);
  eqc->add_option("--angular", eq.grid.angular);
  eqc->callback([&] {
    eq.range = range_from(g.product_range);
    eq.seed = g.seed;
    report = run_norm_equivalence(eq);
  });

  // algebra
  AlgebraConfig alg;
  auto* al = sub("algebra", "exp/log round trip and exp(alpha log zeta) against d_alpha");
  al->add_option("--n", alg.n);
  al->add_option("--alphas", alg.alphas)->delimiter(',');
  al->callback([&] {
    alg.seed = g.seed;
    report = run_algebra_oracles(alg);
  });

  // twist
  TwistConfig tw;
  auto* t = sub("twist", "Character twist commuting with composition");
  t->add_option("--trials", tw.trials);
  t->add_option("--n", tw.n);
  t->add_option("--symbol-length", tw.symbol_length);
  t->callback([&] {
    tw.seed = g.seed;
    report = run_twist_identity(tw);
  });

  try {
    app.parse(argc, argv);
    emit(report, parse_format(g.format), std::filesystem::path(g.out));
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  } catch (const std::exception& err) {
    std::cerr << "dlab: " << err.what() << "\n";
    return 2;
  }
  return g.strict && !report.all_pass() ? 1 : 0;
}
