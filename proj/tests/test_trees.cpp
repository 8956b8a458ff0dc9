#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sturmian/christoffel.hpp"
#include "sturmian/continuants.hpp"
#include "sturmian/stern.hpp"
#include "sturmian/trees.hpp"

using namespace sturmian;
using namespace sturmian::literals;

TEST(Trees, Numbering) {
  EXPECT_EQ(nu(Word{}), 2);
  EXPECT_EQ(nu("abba"_w), 23);
  EXPECT_EQ(nu_inverse(23), "abba"_w);
  EXPECT_EQ(nu_inverse(2), Word{});
  EXPECT_THROW(nu_inverse(1), Error);
  for (unsigned n = 2; n < 5000; ++n) EXPECT_EQ(nu(nu_inverse(n)), n);
}

TEST(Trees, Labels) {
  EXPECT_EQ(raney(Word{}), Fraction(1, 1));
  EXPECT_EQ(raney("ab"_w), Fraction(3, 2));
  EXPECT_EQ(raney("abaa"_w), Fraction(3, 8));
  EXPECT_EQ(raney("abba"_w), Fraction(5, 7));
  EXPECT_EQ(stern_brocot("abaa"_w), Fraction(4, 7));
  EXPECT_EQ(stern_brocot(Word{}), Fraction(1, 1));
}

TEST(Trees, LabelsAgreeWithWalks) {
  for (const auto& s : oracle::words_up_to(12)) {
    const Word w = Word::parse(s);
    const auto ra = oracle::raney_walk(s);
    const auto sb = oracle::stern_brocot_mediant(s);
    EXPECT_EQ(raney(w), Fraction(ra.p, ra.q)) << s;
    EXPECT_EQ(stern_brocot(w), Fraction(sb.p, sb.q)) << s;
  }
}

TEST(Trees, DualityAndComplement) {
  for (const auto& s : oracle::words_up_to(12)) {
    const Word w = Word::parse(s);
    EXPECT_EQ(stern_brocot(w), raney(reverse(w)));
    EXPECT_EQ(raney(complement(w)), raney(w).reciprocal());
    EXPECT_EQ(stern_brocot(complement(w)), stern_brocot(w).reciprocal());
    // The Stern-Brocot label is the slope of the Christoffel word.
    const Word c = christoffel_by_directive(w).word;
    EXPECT_EQ(stern_brocot(w), Fraction(c.count(Letter::b), c.count(Letter::a)));
  }
}

TEST(Trees, RaOfN) {
  EXPECT_EQ(ra_of(2), Fraction(1, 1));
  EXPECT_EQ(ra_of(23), Fraction(5, 7));
  EXPECT_EQ(ra_of(3), Fraction(1, 2));
  EXPECT_THROW(ra_of(1), Error);
  for (std::uint64_t n = 2; n <= 4096; ++n) {
    EXPECT_EQ(ra_of(n), Fraction(oracle::stern(n - 1), oracle::stern(n)));
    EXPECT_EQ(ra_of(n), raney(nu_inverse(n)));
  }
}

TEST(Trees, PathOfFraction) {
  EXPECT_EQ(path_of_fraction(Fraction(1, 1), TreeFlavor::raney), Word{});
  EXPECT_EQ(path_of_fraction(Fraction(3, 2), TreeFlavor::raney), "ab"_w);
  EXPECT_EQ(path_of_fraction(Fraction(4, 7), TreeFlavor::stern_brocot), "abaa"_w);
  EXPECT_THROW(path_of_fraction(Fraction(0, 1), TreeFlavor::raney), Error);
  for (const auto& s : oracle::words_up_to(11)) {
    const Word w = Word::parse(s);
    EXPECT_EQ(path_of_fraction(raney(w), TreeFlavor::raney), w);
    EXPECT_EQ(path_of_fraction(stern_brocot(w), TreeFlavor::stern_brocot), w);
  }
  // Large numerators and denominators with small partial quotients.
  const Fraction big(fib(300), fib(299));
  const Word path = path_of_fraction(big, TreeFlavor::stern_brocot);
  EXPECT_EQ(stern_brocot(path), big);
}

TEST(Trees, Node) {
  const auto node = tree_node("abba"_w);
  EXPECT_EQ(node.number, 23);
  EXPECT_EQ(node.raney, Fraction(5, 7));
  EXPECT_EQ(node.stern_brocot, raney("abba"_w));
}
