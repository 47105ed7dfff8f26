#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "dlab/arith.hpp"
#include "dlab/errors.hpp"

using namespace dlab;
using namespace dlab::arith;

namespace {

// Trial division, independent of the sieve.
unsigned omega_by_trial(std::uint64_t n) {
  unsigned count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  return count + (n > 1 ? 1 : 0);
}

std::uint64_t divisors_by_enumeration(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d <= n; ++d) count += n % d == 0;
  return count;
}

// d_alpha by Dirichlet convolution of the constant-1 function with itself, for integer alpha.
double d_k_by_convolution(std::uint64_t n, int k) {
  std::vector<double> f(n + 1, 1.0);
  f[0] = 0.0;
  for (int step = 1; step < k; ++step) {
    std::vector<double> g(n + 1, 0.0);
    for (std::uint64_t d = 1; d <= n; ++d) {
      for (std::uint64_t m = d; m <= n; m += d) g[m] += f[d];
    }
    f = g;
  }
  return f[n];
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("dlab_test_") + name);
}

}  // namespace

TEST(FactorTable, SmallOmegaTable) {
  const auto t = build_factor_table(10);
  const unsigned expected[] = {0, 1, 1, 2, 1, 2, 1, 3, 2, 2};
  for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_EQ(t.omega(n), expected[n - 1]) << n;
}

TEST(FactorTable, TwoIsPrime) {
  const auto t = build_factor_table(2);
  EXPECT_EQ(t.spf(2), 2u);
  EXPECT_EQ(t.omega(2), 1);
}

TEST(FactorTable, AgreesWithTrialDivision) {
  const auto t = build_factor_table(20000);
  for (std::uint64_t n = 1; n <= 20000; ++n) ASSERT_EQ(t.omega(n), omega_by_trial(n)) << n;
}

TEST(FactorTable, SegmentedMatchesLinear) {
  const auto linear = build_factor_table(100000);
  const auto segmented = build_factor_table(100000, {4096, 1});
  const auto threaded = build_factor_table(100000, {4096, 4});
  const auto a = linear.omega_values();
  const auto b = segmented.omega_values();
  const auto c = threaded.omega_values();
  EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  EXPECT_TRUE(std::equal(a.begin(), a.end(), c.begin(), c.end()));
}

TEST(FactorTable, CapacityErrors) {
  EXPECT_THROW(build_factor_table(0), CapacityError);
  EXPECT_THROW(build_factor_table(kMaxSieveLimit + 1), CapacityError);
}

TEST(FactorTable, OutOfRange) {
  const auto t = build_factor_table(10);
  EXPECT_THROW(t.omega(11), RangeError);
  EXPECT_THROW(t.omega(0), RangeError);
}

TEST(DAlpha, Examples) {
  const auto t = build_factor_table(100);
  EXPECT_DOUBLE_EQ(d_alpha(6, 2.0, t), 4.0);
  EXPECT_DOUBLE_EQ(d_alpha(4, 3.0, t), 6.0);
  EXPECT_DOUBLE_EQ(d_alpha(2, 0.5, t), 0.5);
  EXPECT_THROW(d_alpha(0, 1.0, t), DomainError);
}

TEST(DAlpha, DivisorCountMatchesEnumeration) {
  const auto t = build_factor_table(3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    ASSERT_EQ(divisor_count(n, t), divisors_by_enumeration(n)) << n;
    ASSERT_DOUBLE_EQ(d_alpha(n, 2.0, t), static_cast<double>(divisors_by_enumeration(n))) << n;
  }
}

TEST(DAlpha, IntegerOrdersMatchRepeatedConvolution) {
  const auto t = build_factor_table(720);
  for (int k : {2, 3, 4}) {
    for (std::uint64_t n : {1, 2, 12, 60, 64, 360, 720}) {
      EXPECT_NEAR(d_alpha(n, k, t), d_k_by_convolution(n, k), 1e-9) << "k=" << k << " n=" << n;
    }
  }
}

TEST(OmegaClasses, BruteForceCounts) {
  const auto t = build_factor_table(100);
  const auto h30 = count_omega_classes(t, 30);
  std::uint64_t primes = 0;
  std::uint64_t semiprimes = 0;
  for (std::uint64_t n = 2; n <= 100; ++n) {
    if (n <= 30 && omega_by_trial(n) == 1) ++primes;
    if (omega_by_trial(n) == 2) ++semiprimes;
  }
  EXPECT_EQ(h30.counts[1], primes);
  EXPECT_EQ(count_omega_classes(t).counts[2], semiprimes);

  const auto h1 = count_omega_classes(build_factor_table(1));
  ASSERT_EQ(h1.counts.size(), 1u);
  EXPECT_EQ(h1.counts[0], 1u);
}

TEST(OmegaClasses, SumOfPowers) {
  double oracle = 0.0;
  for (std::uint64_t n = 1; n <= 10; ++n) oracle += omega_by_trial(n);
  EXPECT_DOUBLE_EQ(sum_omega_power(build_factor_table(10), 1.0), oracle);
  EXPECT_DOUBLE_EQ(sum_omega_power(build_factor_table(1), 2.5), 0.0);
  double squares = 0.0;
  for (std::uint64_t n = 2; n <= 4; ++n) squares += std::pow(omega_by_trial(n), 2);
  EXPECT_DOUBLE_EQ(sum_omega_power(build_factor_table(4), 2.0), squares);
}

TEST(ErdosKac, SampleFormula) {
  const auto t = build_factor_table(1000);
  const auto s = erdos_kac_samples(t);
  ASSERT_EQ(s.size(), 1000u - 15u);
  const double ll16 = std::log(std::log(16.0));
  EXPECT_NEAR(s[0], (4.0 - ll16) / std::sqrt(ll16), 1e-14);
  const double ll997 = std::log(std::log(997.0));
  EXPECT_NEAR(s[997 - 16], (1.0 - ll997) / std::sqrt(ll997), 1e-14);
  EXPECT_THROW(erdos_kac_samples(t, 15), DomainError);
}

TEST(ErdosKac, SamplesMatchTrialDivision) {
  const auto s = erdos_kac_samples(build_factor_table(20000));
  for (std::uint64_t n = 16; n <= 20000; n += 7) {
    const double ll = std::log(std::log(static_cast<double>(n)));
    ASSERT_NEAR(s[n - 16], (omega_by_trial(n) - ll) / std::sqrt(ll), 1e-13) << n;
  }
}

// The normalized mean drifts to 0 only like B / sqrt(log log X), where
// B = gamma + sum_p (log(1 - 1/p) + 1/(p - 1)) ~ 1.03 is the constant in the mean of Omega.
TEST(ErdosKac, MeanTracksMertensOffset) {
  const auto table = build_factor_table(1'000'000);
  const auto s = erdos_kac_samples(table);
  auto mean_upto = [&](std::size_t x) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 16 <= x; ++i) sum += s[i];
    return sum / static_cast<double>(x - 15);
  };
  double b = 0.5772156649015329;
  for (std::uint64_t p = 2; p <= 1'000'000; ++p) {
    if (table.omega(p) == 1) b += std::log1p(-1.0 / p) + 1.0 / (p - 1.0);
  }
  const double m4 = mean_upto(10'000);
  const double m6 = mean_upto(1'000'000);
  EXPECT_LT(m6, m4);
  EXPECT_GT(m6, 0.0);
  EXPECT_NEAR(m6, b / std::sqrt(std::log(std::log(1e6))), 0.15);
}

TEST(Cache, RoundTrip) {
  const auto path = temp_file("roundtrip.bin");
  const auto t = build_factor_table(10000);
  save_cache(t, path);
  const auto back = load_cache(path);
  const auto a = t.omega_values();
  const auto b = back.omega_values();
  EXPECT_EQ(back.limit(), t.limit());
  EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  std::filesystem::remove(path);
}

TEST(Cache, CorruptFilesAreDistinguished) {
  const auto path = temp_file("corrupt.bin");
  save_cache(build_factor_table(1000), path);
  std::string bytes;
  {
    std::ifstream in(path, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto write = [&](const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
  };
  auto kind_of = [&] {
    try {
      load_cache(path);
    } catch (const CacheError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no CacheError";
    return CacheError::Kind::kIo;
  };

  std::string bad = bytes;
  bad[0] = 'X';
  write(bad);
  EXPECT_EQ(kind_of(), CacheError::Kind::kBadMagic);

  write(bytes.substr(0, bytes.size() / 2));
  EXPECT_EQ(kind_of(), CacheError::Kind::kTruncated);

  bad = bytes;
  bad[4] = static_cast<char>(bad[4] + 1);  // version field follows the magic
  write(bad);
  EXPECT_EQ(kind_of(), CacheError::Kind::kVersionMismatch);

  bad = bytes;
  bad[bytes.size() - 20] ^= 1;  // a payload byte
  write(bad);
  EXPECT_EQ(kind_of(), CacheError::Kind::kChecksum);
  std::filesystem::remove(path);
}
