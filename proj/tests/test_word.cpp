#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sturmian/subword.hpp"
#include "sturmian/word.hpp"

using namespace sturmian;
using namespace sturmian::literals;

TEST(Word, ParseAndPrint) {
  EXPECT_EQ("abba"_w.str(), "abba");
  EXPECT_TRUE(Word::parse("eps").empty());
  EXPECT_TRUE(Word::parse("").empty());
  EXPECT_EQ(Word::parse("0110", Alphabet::digits), "abba"_w);
  EXPECT_EQ("abba"_w.str(Alphabet::digits), "0110");
  try {
    Word::parse("abc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
  }
}

TEST(Word, ComplementAndReverse) {
  EXPECT_EQ(complement(Word{}), Word{});
  EXPECT_EQ(complement("ab"_w), "ba"_w);
  EXPECT_EQ(complement("abbaa"_w), "baabb"_w);
  EXPECT_EQ(reverse("aab"_w), "baa"_w);
  EXPECT_EQ(reverse("abaaba"_w), "abaaba"_w);
  for (const auto& s : oracle::words_up_to(8)) {
    const Word w = Word::parse(s);
    EXPECT_EQ(reverse(reverse(w)), w);
    EXPECT_EQ(complement(complement(w)), w);
    EXPECT_EQ(reverse(complement(w)), complement(reverse(w)));
  }
}

TEST(Word, DropAndPlus) {
  const Word v = "abbabab"_w;
  EXPECT_EQ(drop_last(v), "abbaba"_w);
  EXPECT_EQ(drop_first(v), "bbabab"_w);
  EXPECT_EQ(plus_prefix(v), "abbab"_w);
  EXPECT_EQ(plus_suffix(v), "babab"_w);
  EXPECT_EQ(drop_last("a"_w), Word{});
  EXPECT_EQ(plus_prefix("ab"_w), Word{});
  EXPECT_THROW(drop_last(Word{}), Error);
  EXPECT_THROW(plus_prefix("aaa"_w), Error);
  EXPECT_THROW(plus_suffix(Word{}), Error);
}

TEST(Word, PlusPrefixMatchesDefinition) {
  for (const auto& s : oracle::words_up_to(9)) {
    const Word v = Word::parse(s);
    if (v.is_constant()) continue;
    const char y = s.back() == 'a' ? 'b' : 'a';
    std::size_t best = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == y) best = i;
    EXPECT_EQ(plus_prefix(v).str(), s.substr(0, best)) << s;
  }
}

TEST(Word, Encoding) {
  EXPECT_EQ(encode("baaba"_w), 18);
  EXPECT_EQ(decode(21), "babab"_w);
  EXPECT_EQ(encode("a"_w), 0);
  EXPECT_EQ(decode(0), "a"_w);
  for (unsigned n = 1; n < 2000; ++n) EXPECT_EQ(encode(decode(n)), n);
}

TEST(Word, FactorCount) {
  EXPECT_EQ(factor_count("bababab"_w, "bab"_w), 3u);
  EXPECT_EQ(factor_count("bababab"_w, "b"_w), 4u);
  EXPECT_EQ(factor_count("aaa"_w, "aa"_w), 2u);
  EXPECT_THROW(factor_count("ab"_w, Word{}), Error);
}

TEST(Word, MinPeriodAgreesWithScan) {
  EXPECT_EQ(min_period("abaabaaba"_w), 3u);
  EXPECT_EQ(min_period(Word{}), 1u);
  EXPECT_EQ(min_period("aa"_w), 1u);
  for (const auto& s : oracle::words_up_to(11))
    if (!s.empty()) {
      EXPECT_EQ(min_period(Word::parse(s)), oracle::min_period(s)) << s;
    }
}

TEST(Word, LyndonAgreesWithSuffixComparison) {
  EXPECT_TRUE(is_lyndon("aab"_w));
  EXPECT_FALSE(is_lyndon("aa"_w));
  EXPECT_TRUE(is_lyndon("b"_w));
  EXPECT_FALSE(is_lyndon(Word{}));
  for (const auto& s : oracle::words_up_to(11))
    if (!s.empty()) {
      EXPECT_EQ(is_lyndon(Word::parse(s)), oracle::lyndon(s)) << s;
    }
}

TEST(Word, LexOrder) {
  EXPECT_TRUE("ab"_w < "abb"_w);
  EXPECT_TRUE("aab"_w < "ab"_w);
  EXPECT_EQ(lex_compare("ba"_w, "ab"_w), std::strong_ordering::greater);
}

TEST(Word, IntegralRepresentation) {
  EXPECT_EQ(integral_rep("bbabaa"_w).runs, (std::vector<std::size_t>{2, 1, 1, 2, 0}));
  EXPECT_EQ(integral_rep("aaababb"_w).runs, (std::vector<std::size_t>{0, 3, 1, 1, 2}));
  EXPECT_EQ(integral_rep(Word{}).runs, (std::vector<std::size_t>{0}));
  EXPECT_EQ(integral_rep("abba"_w).runs, (std::vector<std::size_t>{0, 1, 2, 1, 0}));
  for (const auto& s : oracle::words_up_to(10)) {
    const Word w = Word::parse(s);
    const auto rep = integral_rep(w);
    EXPECT_TRUE(rep.valid());
    EXPECT_EQ(word_of(rep), w);
  }
  EXPECT_THROW(word_of(IntegralRep{{1, 0, 1}}), Error);
  EXPECT_THROW(word_of(IntegralRep{{1, 2}}), Error);
}

TEST(Subword, BinomialAgreesWithEnumeration) {
  EXPECT_EQ(subword_binomial("ab"_w, Word{}), 1);
  EXPECT_EQ(subword_binomial("bab"_w, "b"_w), 2);
  const std::vector<std::string> hosts = {"babbaab", "abbabaab", "bbbaaab", "ababababab"};
  for (const auto& w : hosts)
    for (const auto& u : oracle::words_up_to(4))
      EXPECT_EQ(subword_binomial(Word::parse(w), Word::parse(u)), oracle::subword_count(w, u)) << w << " " << u;
}

TEST(Subword, Occurrences) {
  const auto ab = subword_occurrences("ab"_w, "ab"_w);
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab[0].positions, (std::vector<std::size_t>{1, 2}));
  std::vector<std::vector<std::size_t>> bs;
  for (const auto& o : subword_occurrences("babbaab"_w, "b"_w)) bs.push_back(o.positions);
  EXPECT_EQ(bs, (std::vector<std::vector<std::size_t>>{{1}, {3}, {4}, {7}}));
  const auto bab = subword_occurrences("babbaab"_w, "bab"_w);
  EXPECT_EQ(bab.size(), oracle::subword_count("babbaab", "bab"));
  EXPECT_TRUE(std::is_sorted(bab.begin(), bab.end()));
  EXPECT_THROW(subword_occurrences("bbbbbbbbbb"_w, "bb"_w, 10), Error);
}
