// Timings for the hot paths: sieving, Dirichlet-series algebra, disk quadrature
// and the iterated-log integral.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "dlab/arith.hpp"
#include "dlab/asymptotics.hpp"
#include "dlab/dirichlet.hpp"
#include "dlab/fixtures.hpp"
#include "dlab/rng.hpp"
#include "dlab/spaces.hpp"

using namespace dlab;
using dirichlet::DirichletPoly;
using harness::CounterRng;
using Complex = std::complex<double>;

static void BM_LinearSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::build_factor_table(limit));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinearSieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_SegmentedSieve(benchmark::State& state) {
  arith::SieveOptions options;
  options.segment_size = 1 << 18;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith::build_factor_table(10'000'000, options));
}
BENCHMARK(BM_SegmentedSieve)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_LogZeta(benchmark::State& state) {
  const auto zeta = DirichletPoly::zeta(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::log_series(zeta));
}
BENCHMARK(BM_LogZeta)->Arg(1'000)->Arg(10'000)->Arg(100'000);

static void BM_ExpLogRoundTrip(benchmark::State& state) {
  CounterRng rng(0);
  const auto f = harness::random_annulus_poly(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::exp_series(dirichlet::log_series(f)));
}
BENCHMARK(BM_ExpLogRoundTrip)->Arg(1'000)->Arg(10'000);

static void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto phi = harness::GhFixture::canonical().symbol();
  const auto f = DirichletPoly::zeta(n);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet::compose_zero_c0(f, phi, n));
}
BENCHMARK(BM_Compose)->Arg(256)->Arg(512)->Arg(2048);

static void BM_DiskGrid(benchmark::State& state) {
  const spaces::BergmanSpec spec(1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spaces::DiskGrid(spec));
}
BENCHMARK(BM_DiskGrid)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_DiskNorm(benchmark::State& state) {
  const spaces::BergmanSpec spec(1.0, 2);
  const spaces::DiskGrid grid(spec);
  auto f = [](Complex z) { return std::exp(z) / (2.0 - z); };
  for (auto _ : state) benchmark::DoNotOptimize(spaces::disk_norm_sq(f, spec, grid));
}
BENCHMARK(BM_DiskNorm)->Unit(benchmark::kMillisecond);

static void BM_Lemma32Integral(benchmark::State& state) {
  const double log_n = std::exp(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics::lemma32_integral(log_n, 1.0, 2));
}
BENCHMARK(BM_Lemma32Integral)->Arg(3)->Arg(8)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
