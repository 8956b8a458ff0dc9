#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sturmian/continuants.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/trees.hpp"

using namespace sturmian;
using namespace sturmian::literals;

TEST(Continuant, Examples) {
  EXPECT_EQ(continuant({1, 1, 2, 1}), 7);
  EXPECT_EQ(continuant(std::vector<long long>{}), 1);
  EXPECT_EQ(continuant({5}), 5);
  EXPECT_EQ(continuant({1, -3, 1}), -1);
  EXPECT_EQ(continuant({1, -3, 1, -5}), 3);
}

TEST(Continuant, AgreesWithRecursiveAndPairDeletionRules) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> len(0, 9), val(-6, 6);
  for (int t = 0; t < 2000; ++t) {
    std::vector<long long> xs(len(rng));
    for (auto& x : xs) x = val(rng);
    EXPECT_EQ(continuant(xs), oracle::continuant(xs));
    EXPECT_EQ(continuant(xs), oracle::continuant_by_pairs(xs));
    // Reversal symmetry.
    EXPECT_EQ(continuant(xs), continuant(std::vector<long long>(xs.rbegin(), xs.rend())));
  }
}

TEST(ContinuedFraction, Values) {
  EXPECT_EQ(cf_value({0, 1}), Fraction(1, 1));
  EXPECT_EQ(cf_value({1, 1, 1}), Fraction(3, 2));
  EXPECT_EQ(cf_value({3}), Fraction(3, 1));
  EXPECT_THROW(cf_value(std::vector<long long>{}), Error);
  EXPECT_THROW(cf_value({1, 0}), Error);
}

TEST(Fibonacci, Indexing) {
  EXPECT_EQ(fib(-1), 1);
  EXPECT_EQ(fib(0), 1);
  EXPECT_EQ(fib(1), 2);
  EXPECT_EQ(fib(6), 21);
  EXPECT_THROW(fib(-2), Error);
  for (long long n = 1; n < 80; ++n) EXPECT_EQ(fib(n + 1), fib(n) + fib(n - 1));
}

TEST(Mirror, Examples) {
  const auto root = mirror_formula(Word{});
  EXPECT_EQ(root.sb, Fraction(1, 1));
  EXPECT_EQ(root.ra, Fraction(1, 1));
  EXPECT_EQ(mirror_formula("abaa"_w).ra, Fraction(3, 8));
  EXPECT_EQ(mirror_formula("abaa"_w).sb, Fraction(4, 7));
}

TEST(Mirror, AgreesWithTreeWalks) {
  for (const auto& s : oracle::words_up_to(11)) {
    const auto m = mirror_formula(Word::parse(s));
    const auto sb = oracle::stern_brocot_mediant(s);
    const auto ra = oracle::raney_walk(s);
    EXPECT_EQ(m.sb, Fraction(sb.p, sb.q)) << s;
    EXPECT_EQ(m.ra, Fraction(ra.p, ra.q)) << s;
  }
}

TEST(LengthAndPeriod, Examples) {
  const auto lp = christoffel_length_cf("abaa"_w);
  EXPECT_EQ(lp.length, 11);
  EXPECT_EQ(lp.period, 3);
  for (std::size_t n = 0; n < 20; ++n) {
    EXPECT_EQ(christoffel_length_cf(Word(n, Letter::a)).length, n + 2);
    EXPECT_EQ(christoffel_length_cf(Word(n, Letter::a)).period, 1);
  }
  Word alt;
  for (long long k = 1; k < 30; ++k) {
    alt.push_back(k % 2 ? Letter::a : Letter::b);
    EXPECT_EQ(christoffel_length_cf(alt).length, fib(k + 1));
  }
}

TEST(LengthAndPeriod, AgreesWithExplicitWords) {
  for (const auto& s : oracle::words_up_to(11)) {
    const auto lp = christoffel_length_cf(Word::parse(s));
    const std::string p = oracle::psi(s);
    EXPECT_EQ(lp.length, p.size() + 2) << s;
    EXPECT_EQ(lp.period, oracle::min_period(p)) << s;
  }
}
