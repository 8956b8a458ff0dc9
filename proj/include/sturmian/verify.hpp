#pragma once

// Replays the identities relating central/Christoffel words, the Raney and
// Stern-Brocot trees, Stern's sequence and continuants over bounded domains.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/calkin_wilf.hpp"
#include "sturmian/christoffel.hpp"
#include "sturmian/continuants.hpp"
#include "sturmian/coons_shallit.hpp"
#include "sturmian/distribution.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/reference.hpp"
#include "sturmian/stern.hpp"
#include "sturmian/trees.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

struct VerifyOptions {
  unsigned max_k = 12;                 // longest directive / word examined
  std::uint64_t max_n = 1u << 14;      // largest integer argument of Stern checks
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

// A failing check reports its first counterexample.
class Witness {
 public:
  template <class... Parts>
  void fail(const Parts&... parts) {
    if (!ok_) return;
    ok_ = false;
    std::ostringstream os;
    (os << ... << parts);
    detail_ = os.str();
  }
  bool ok() const { return ok_; }
  const std::string& detail() const { return detail_; }

 private:
  bool ok_ = true;
  std::string detail_;
};

inline Word christoffel_of(const Word& v) { return Letter::a + psi(v) + Letter::b; }

inline Fraction letter_slope(const Word& w) { return Fraction(BigInt(w.count(Letter::b)), BigInt(w.count(Letter::a))); }

// Longest proper suffix of w that is a Lyndon word.
inline std::size_t longest_lyndon_suffix(const Word& w) {
  for (std::size_t start = 1; start < w.size(); ++start)
    if (is_lyndon(w.substr(start))) return w.size() - start;
  return 0;
}

}  // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
  using detail::Witness;
  const unsigned K = opt.max_k;
  const std::uint64_t N = opt.max_n;
  std::vector<CheckResult> results;
  auto run = [&](std::string name, const std::function<void(Witness&)>& body) {
    Witness w;
    try {
      body(w);
    } catch (const std::exception& e) {
      w.fail("exception: ", e.what());
    }
    results.push_back({std::move(name), w.ok(), w.detail()});
  };

  run("Justin's formula psi(vu) = mu_v(psi(u)) psi(v)", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 12u), [&](const Word& vu) {
      for (std::size_t cut = 0; cut <= vu.size(); ++cut) {
        const Word v = vu.substr(0, cut), u = vu.substr(cut);
        if (psi(vu) != mu(v, psi(u)) + psi(v)) w.fail("v=", v, " u=", u);
      }
    });
  });

  run("palindromization: palindromes, nested prefixes, reversal, complement, injectivity", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 14u), [&](const Word& v) {
      const Word p = psi(v);
      if (!p.is_palindrome()) w.fail("psi(", v, ") not a palindrome");
      if (!v.empty()) {
        const Word q = psi(drop_last(v));
        if (!p.starts_with(q) || reverse(p).starts_with(reverse(q)) == false) w.fail("prefix property at ", v);
      }
      if (psi(reverse(v)).size() != p.size()) w.fail("reversal length at ", v);
      if (psi(complement(v)) != complement(p)) w.fail("complement at ", v);
      if (psi_inverse(p) != v) w.fail("inverse at ", v);
    });
  });

  run("period pair equals (|mu_v(a)|, |mu_v(b)|)", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 14u), [&](const Word& v) {
      const auto pp = period_pair(v);
      if (pp.p_a != mu(v, Word{Letter::a}).size() || pp.p_b != mu(v, Word{Letter::b}).size()) w.fail("v=", v);
      if (gcd(pp.p_a, pp.p_b) != 1) w.fail("periods not coprime at ", v);
      if (min_period(psi(v)) != min_period_central(v)) w.fail("minimal period at ", v);
    });
  });

  run("|psi(v)| as a sum of prefix periods and of suffix letter counts", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 12u), [&](const Word& v) {
      if (v.empty()) return;
      BigInt by_periods = 0, by_counts = 0;
      for (std::size_t i = 1; i <= v.size(); ++i) by_periods += min_period(psi(v.substr(0, i)));
      for (std::size_t i = 0; i < v.size(); ++i)
        by_counts += detail::christoffel_of(v.substr(i)).count(complement(v[i]));
      const BigInt len = psi(v).size();
      if (by_periods != len || by_counts != len) w.fail("v=", v);
    });
  });

  run("Christoffel words by slope and by directive coincide", [&](Witness& w) {
    for (unsigned n = 2; n <= 200; ++n) {
      for (unsigned p = 1; p < n; ++p) {
        if (std::gcd(p, n) != 1) continue;
        const auto cw = christoffel_by_slope(p, n - p);
        const auto v = directive_of(cw.word);
        if (!v || christoffel_by_directive(*v).word != cw.word || stern_brocot(*v) != Fraction(p, n - p))
          w.fail("slope ", p, "/", n - p);
        if (!is_lyndon(cw.word)) w.fail("not Lyndon: ", cw.word);
      }
    }
  });

  run("standard factorization lengths are the period pair and invert the slope", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 12u), [&](const Word& v) {
      const auto cw = christoffel_by_directive(v);
      const auto [w1, w2] = lyndon_factorization(cw);
      const auto pp = period_pair(v);
      const BigInt n = cw.word.size();
      if (w1.word + w2.word != cw.word || !(w1.word < w2.word)) w.fail("factorization at ", v);
      if (!is_lyndon(w1.word) || !is_lyndon(w2.word)) w.fail("factors not Lyndon at ", v);
      if (w2.word.size() != detail::longest_lyndon_suffix(cw.word)) w.fail("not the standard factorization at ", v);
      if (pp.p_a != w1.word.size() || pp.p_b != w2.word.size()) w.fail("lengths at ", v);
      if ((BigInt(w1.word.size()) * cw.word.count(Letter::b)) % n != 1 % n ||
          (BigInt(w2.word.size()) * cw.word.count(Letter::a)) % n != 1 % n)
        w.fail("congruences at ", v);
    });
  });

  run("minimal period of psi(v~) counts the letter complementary to the first of v", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 12u), [&](const Word& v) {
      if (v.empty()) return;
      if (min_period(psi(reverse(v))) != detail::christoffel_of(v).count(complement(v.front()))) w.fail("v=", v);
    });
  });

  run("length splits along v^-, v_+ and ^-v, _+v", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 14u), [&](const Word& v) {
      if (v.is_constant()) return;
      auto len = [](const Word& x) { return period_pair(x).christoffel_length(); };
      const BigInt total = len(v);
      if (total != len(drop_last(v)) + len(plus_prefix(v))) w.fail("right split at ", v);
      if (total != len(drop_first(v)) + len(plus_suffix(v))) w.fail("left split at ", v);
      if (len(plus_prefix(v)) != min_period(psi(v))) w.fail("period at ", v);
      if (len(plus_suffix(v)) != detail::christoffel_of(v).count(complement(v.front()))) w.fail("count at ", v);
      const auto cmp = length_compare_extension(v);
      if ((cmp == std::strong_ordering::less) != (v.back() == Letter::a)) w.fail("extension order at ", v);
    });
  });

  run("Stern values at <bwb> and <bwb>+1 are Christoffel lengths and central periods", [&](Witness& w) {
    for_each_word_up_to(K, [&](const Word& v) {
      const BigInt n = encode(Letter::b + v + Letter::b);
      if (stern(n) != detail::christoffel_of(v).size()) w.fail("length at ", v);
      if (stern(n + 1) != min_period(psi(v + Letter::b))) w.fail("period at ", v);
    });
  });

  run("Stern evaluators agree (recurrence, descent, Christoffel, b(ab)* subwords)", [&](Witness& w) {
    for (std::uint64_t n = 0; n <= N; ++n) {
      const BigInt s = stern(n);
      if (stern_by_descent(n) != s || stern_via_christoffel(n) != s || stern_via_subwords(n) != s) w.fail("n=", n);
    }
  });

  run("signed zeta continuant gives Stern's sequence", [&](Witness& w) {
    for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(N, 5000); ++n)
      if (stern_via_zeta(n) != stern(n)) w.fail("n=", n);
  });

  run("Stern values from integral representations", [&](Witness& w) {
    for_each_word_up_to(K, [&](const Word& v) {
      if (stern_via_integral_continuant(v) != stern(nu(v))) w.fail("w=", v);
    });
  });

  run("sorted reversed b(ab)* occurrences spell psi(w)ba", [&](Witness& w) {
    for_each_word_up_to(std::min(K, 10u), [&](const Word& v) {
      const auto cw = noncommutative_cw(v);
      if (cw.markers != psi(v) + Word{Letter::b, Letter::a}) w.fail("w=", v);
      if (initial_subword_count(v) != detail::christoffel_of(v).count(Letter::a)) w.fail("initial count at ", v);
      if (cw_length(v) != cw.markers.size()) w.fail("length at ", v);
      if (!v.is_constant() && cw_period(v) != min_period(psi(v))) w.fail("period at ", v);
    });
  });

  run("Coons-Shallit decomposition of Christoffel lengths", [&](Witness& w) {
    for_each_word_up_to(K, [&](const Word& v) {
      if (cs_decompose(v).total() != period_pair(v).christoffel_length()) w.fail("w=", v);
    });
    for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(N, 4096); ++n)
      if (!coons_shallit_check(n)) w.fail("n=", n);
  });

  run("tree labels: duality, complement inversion, slopes, ra(n) = s(n-1)/s(n)", [&](Witness& w) {
    for_each_word_up_to(K, [&](const Word& v) {
      const Fraction ra = raney(v);
      if (stern_brocot(v) != raney(reverse(v))) w.fail("duality at ", v);
      if (stern_brocot(v) != detail::letter_slope(detail::christoffel_of(v))) w.fail("slope at ", v);
      if (raney(complement(v)) != ra.reciprocal() || stern_brocot(complement(v)) != stern_brocot(v).reciprocal())
        w.fail("complement at ", v);
      if (nu_inverse(nu(v)) != v) w.fail("numbering at ", v);
      if (path_of_fraction(ra, TreeFlavor::raney) != v) w.fail("path lookup at ", v);
    });
    for (std::uint64_t n = 2; n <= N; ++n) {
      const Fraction f = ra_of(n);
      if (f != raney(nu_inverse(n)) || f.num() != stern(n - 1) || f.den() != stern(n)) w.fail("ra(", n, ")");
    }
  });

  run("mirror formula matches the tree labels", [&](Witness& w) {
    for_each_word_up_to(K, [&](const Word& v) {
      const auto m = mirror_formula(v);
      if (m.sb != stern_brocot(v) || m.ra != raney(v)) w.fail("v=", v);
    });
  });

  run("continuants give Christoffel length and central period", [&](Witness& w) {
    for_each_word_up_to(std::max(K, 14u), [&](const Word& v) {
      const auto pp = period_pair(v);
      const LengthAndPeriod expected{pp.christoffel_length(), v.empty() ? BigInt(1) : pp[v.back()]};
      if (christoffel_length_cf(v) != expected) w.fail("v=", v);
    });
  });

  run("Stern identities: bit reversal, symmetry, e(n), Newman step, zeta fractions", [&](Witness& w) {
    for (std::uint64_t n = 0; n <= N; ++n)
      if (stern(reverse_bits(n)) != stern(n)) w.fail("R at ", n);
    for (unsigned k = 0; (std::uint64_t{1} << (k + 1)) <= N; ++k)
      for (std::uint64_t p = 1; p <= (std::uint64_t{1} << k); ++p)
        if (stern((std::uint64_t{1} << k) + p) != stern((std::uint64_t{2} << k) - p)) w.fail("symmetry k=", k, " p=", p);
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(N, 4096); ++n) {
      if (stern(n - 1) / stern(n) != ruler(n)) w.fail("floor at ", n);
      const BigRational lhs(stern(n), stern(n + 1));
      const BigRational rhs = 1 / (BigRational(2 * ruler(n) + 1) - BigRational(stern(n - 1), stern(n)));
      if (lhs != rhs) w.fail("Newman step at ", n);
    }
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(N, 256); ++n) {
      std::vector<long long> coeffs{0};
      for (std::uint64_t i = n; i >= 1; --i) coeffs.push_back(zeta(i));
      Fraction f = cf_value(coeffs);
      if (n % 2 == 0) f = Fraction(-f.num(), f.den());
      if (f != Fraction(stern(n), stern(n + 1))) w.fail("zeta fraction at ", n);
    }
  });

  run("Stern inequalities s(2^k+8p+1) < s(2^k+8p+3), s(2^k+8p+5) > s(2^k+8p+7)", [&](Witness& w) {
    for (unsigned k = 3; k <= 13 && (std::uint64_t{1} << k) <= N; ++k) {
      const std::uint64_t base = std::uint64_t{1} << k;
      for (std::uint64_t p = 0; p < (base >> 3); ++p) {
        if (!(stern(base + 8 * p + 1) < stern(base + 8 * p + 3))) w.fail("first at k=", k, " p=", p);
        if (!(stern(base + 8 * p + 5) > stern(base + 8 * p + 7))) w.fail("second at k=", k, " p=", p);
      }
    }
  });

  run("delta expansion of s(2n-1)", [&](Witness& w) {
    for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(N, 4096); ++n)
      if (delta_expansion(n).sum() != stern(2 * n - 1)) w.fail("n=", n);
  });

  run("Fibonacci word prefix and alternating directives", [&](Witness& w) {
    const Word ab{Letter::a, Letter::b};
    const Word target = psi(power(ab, 6));
    const Word prefix = psi_prefix(Word{}, ab, static_cast<std::int64_t>(target.size()));
    if (prefix != target || !prefix.starts_with(Word::parse("abaababaabaab"))) w.fail("Fibonacci prefix");
    for (unsigned k = 1; k <= std::max(K, 16u); ++k) {
      const BigInt value = encode(Letter::b + alternating(k - 1, Letter::a) + Letter::b);
      const BigInt expected = ((BigInt(1) << (k + 2)) + (k % 2 == 1 ? 1 : -1)) / 3;
      if (value != expected) w.fail("<b u b> at k=", k);
      if (period_pair(alternating(k, Letter::a)).christoffel_length() != fib(k + 1)) w.fail("F(k+1) at k=", k);
    }
  });

  std::map<unsigned, LengthHistogram> histograms;
  auto hist = [&](unsigned k) -> const LengthHistogram& {
    auto it = histograms.find(k);
    if (it == histograms.end()) it = histograms.emplace(k, histogram(k)).first;
    return it->second;
  };

  run("order-k histograms: mass 2^k, weighted mass 2*3^k, support bounds", [&](Witness& w) {
    for (unsigned k = 0; k <= K; ++k) {
      const auto& h = hist(k);
      if (h.mass() != BigInt(1) << k) w.fail("mass at k=", k);
      if (h.weighted_mass() != 2 * pow(BigInt(3), k)) w.fail("weighted mass at k=", k);
      if (h.counts.begin()->first != k + 2 || h.counts.rbegin()->first != fib(k + 1)) w.fail("support at k=", k);
      for (const auto& [len, c] : h.counts)
        if (c % 2 != 0 && k > 0) w.fail("odd count at k=", k);
    }
  });

  run("M_k and its maximising lengths match the published table", [&](Witness& w) {
    for (const auto& row : reference::max_count_table()) {
      if (row.order > K) break;
      const auto s = summarize(hist(row.order));
      if (s.max_count != row.max_count) w.fail("M_", row.order, " = ", s.max_count);
      for (auto n : row.lengths)
        if (!std::binary_search(s.argmax.begin(), s.argmax.end(), n)) w.fail("n_", row.order, " missing ", n);
    }
  });

  run("missing-length counts match the published list (k from 1)", [&](Witness& w) {
    const auto& counts = reference::missing_length_counts();
    for (unsigned k = 1; k <= std::min<unsigned>(K, counts.size()); ++k)
      if (summarize(hist(k)).missing_count() != counts[k - 1]) w.fail("card(ML_", k, ")");
  });

  run("extremal lengths: constant, alternating, [ab^(k-1)], [v_k], consecutive pairs", [&](Witness& w) {
    for (unsigned k = 3; k <= K; ++k) {
      const auto r = bound_report(k);
      if (!r.all()) w.fail("k=", k);
      if (period_pair(almost_alternating(k)).christoffel_length() != fib(k + 1) - fib(static_cast<long long>(k) - 4))
        w.fail("v_k length at k=", k);
      for (const Word& u : class_of(almost_alternating(k)))
        if (period_pair(u).christoffel_length() != period_pair(almost_alternating(k)).christoffel_length())
          w.fail("class lengths at k=", k);
    }
  });

  run("sum over orders of C_k(n) is Euler's totient", [&](Witness& w) {
    if (!totient_identity_check(300)) w.fail("n <= 300");
  });

  run("M_k exceeds its exponential lower bound", [&](Witness& w) {
    for (unsigned k = 1; k <= K; ++k)
      if (BigRational(summarize(hist(k)).max_count) < mk_lower_bound(k)) w.fail("k=", k);
  });

  run("M_k non-decreasing with M_(k+1) <= M_k + M_(k-1) (observed)", [&](Witness& w) {
    for (unsigned k = 2; k < K; ++k) {
      const auto prev = summarize(hist(k - 1)).max_count, cur = summarize(hist(k)).max_count,
                 next = summarize(hist(k + 1)).max_count;
      if (prev > cur || next > cur + prev) w.fail("k=", k);
    }
  });

  return results;
}

}  // namespace sturmian
