#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "sturmian/continuants.hpp"
#include "sturmian/stern.hpp"
#include "sturmian/trees.hpp"

using namespace sturmian;
using namespace sturmian::literals;

TEST(Stern, Prefix) {
  const std::vector<int> expected = {0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1,
                                     5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7, 4, 5, 1};
  for (std::uint64_t n = 0; n < expected.size(); ++n) EXPECT_EQ(stern(n), expected[n]) << n;
  EXPECT_EQ(stern(23), 7);
}

TEST(Stern, MatchesRecursiveDefinition) {
  for (std::uint64_t n = 0; n <= 20000; ++n) EXPECT_EQ(stern(n), oracle::stern(n)) << n;
}

TEST(Stern, PowersOfTwoAndHugeArguments) {
  for (unsigned k = 0; k <= 30; ++k) EXPECT_EQ(stern(std::uint64_t{1} << k), 1);
  EXPECT_EQ(stern(BigInt(1) << 100), 1);
  const BigInt huge = (BigInt(1) << 300) + 12345;
  EXPECT_EQ(stern(huge), stern_by_descent(huge));
  EXPECT_EQ(stern(huge), stern_via_christoffel(huge));
  EXPECT_EQ(stern(huge), stern_via_subwords(huge));
  EXPECT_THROW(stern(BigInt(-1)), Error);
}

TEST(Stern, CacheIsThreadSafe) {
  std::vector<std::thread> pool;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t)
    pool.emplace_back([t, &bad] {
      for (std::uint64_t n = 50000 + t; n < 90000; n += 3)
        if (stern(n) != oracle::stern(n)) ++bad[t];
    });
  for (auto& th : pool) th.join();
  for (int b : bad) EXPECT_EQ(b, 0);
}

TEST(Stern, ViaChristoffel) {
  EXPECT_EQ(stern_via_christoffel(89), 17);
  EXPECT_EQ(stern_via_christoffel(3), 2);
  EXPECT_EQ(stern_via_christoffel(0), 0);
  EXPECT_EQ(encode("babbaab"_w), 89);
  for (const auto& s : oracle::words_up_to(10)) {
    const Word w = Word::parse(s);
    const BigInt n = encode(Letter::b + w + Letter::b);
    EXPECT_EQ(oracle::stern(static_cast<std::uint64_t>(n)), oracle::psi(s).size() + 2) << s;
    EXPECT_EQ(oracle::stern(static_cast<std::uint64_t>(n + 1)), oracle::min_period(oracle::psi(s + 'b'))) << s;
  }
}

TEST(Stern, ViaSubwords) {
  EXPECT_EQ(stern_via_subwords(11), 5);
  EXPECT_EQ(stern_via_subwords(1), 1);
  EXPECT_EQ(stern_via_subwords(0), 0);
  EXPECT_EQ(oracle::alternating_occurrences("babb").size(), 5u);
  for (std::uint64_t n = 1; n < 4096; ++n)
    EXPECT_EQ(stern_via_subwords(n), oracle::alternating_occurrences(decode(n).str()).size()) << n;
}

TEST(Stern, RulerAndZeta) {
  std::string e;
  for (std::uint64_t n = 1; n <= 15; ++n) e += std::to_string(ruler(n));
  EXPECT_EQ(e, "010201030102010");
  const std::vector<long long> z = {1, -3, 1, -5, 1, -3, 1, -7};
  for (std::uint64_t n = 1; n <= z.size(); ++n) EXPECT_EQ(zeta(n), z[n - 1]);
  EXPECT_THROW(ruler(0), Error);
}

TEST(Stern, ViaZeta) {
  EXPECT_EQ(stern_via_zeta(4), 1);
  EXPECT_EQ(stern_via_zeta(5), 3);
  EXPECT_THROW(stern_via_zeta(1), Error);
  for (std::uint64_t n = 2; n <= 3000; ++n) EXPECT_EQ(stern_via_zeta(n), oracle::stern(n)) << n;
}

TEST(Stern, ViaIntegralRepresentation) {
  EXPECT_EQ(stern_via_integral_continuant("abba"_w), 7);
  EXPECT_EQ(stern_via_integral_continuant(Word{}), 1);
  // b^m has the one-entry representation (m) and nu(b^m) = 2^(m+1).
  for (std::size_t m = 0; m < 12; ++m) EXPECT_EQ(stern_via_integral_continuant(Word(m, Letter::b)), 1);
  for (const auto& s : oracle::words_up_to(12)) {
    const Word w = Word::parse(s);
    EXPECT_EQ(stern_via_integral_continuant(w), oracle::stern(static_cast<std::uint64_t>(nu(w)))) << s;
  }
}

TEST(Stern, BitReversal) {
  EXPECT_EQ(reverse_bits(0), 0);
  EXPECT_EQ(reverse_bits(6), 3);
  for (std::uint64_t n = 0; n <= 1u << 14; ++n) EXPECT_EQ(stern(reverse_bits(n)), stern(n));
}

TEST(Stern, DeltaExpansion) {
  const auto d2 = delta_expansion(2);
  EXPECT_EQ(d2.length, 0u);
  EXPECT_EQ(d2.sum(), 2);
  EXPECT_EQ(stern(3), 2);
  const auto d12 = delta_expansion(12);
  EXPECT_EQ(d12.sum(), 7);
  EXPECT_EQ(stern(23), 7);
  EXPECT_THROW(delta_expansion(1), Error);
  for (std::uint64_t n = 2; n <= 4096; ++n) EXPECT_EQ(delta_expansion(n).sum(), oracle::stern(2 * n - 1)) << n;
}

TEST(Stern, CoonsShallitOnIntegers) {
  for (std::uint64_t n = 0; n <= 4096; ++n) EXPECT_EQ(coons_shallit_value(n), oracle::stern(n)) << n;
}

TEST(Stern, NewmanStepAndFloor) {
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    const auto a = oracle::stern(n - 1), b = oracle::stern(n), c = oracle::stern(n + 1);
    EXPECT_EQ(a / b, ruler(n));
    // s(n+1) = (2 e(n) + 1) s(n) - s(n-1)
    EXPECT_EQ(static_cast<std::int64_t>(c), static_cast<std::int64_t>((2 * ruler(n) + 1) * b) - static_cast<std::int64_t>(a));
  }
}

TEST(Stern, Symmetry) {
  for (unsigned k = 0; k <= 12; ++k)
    for (std::uint64_t p = 0; p <= (std::uint64_t{1} << k); ++p)
      EXPECT_EQ(stern((std::uint64_t{1} << k) + p), stern((std::uint64_t{2} << k) - p));
}
