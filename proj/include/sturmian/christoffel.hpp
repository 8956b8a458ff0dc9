#pragma once

// Central, standard and Christoffel words.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/trees.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

struct ChristoffelWord {
  Word word;
  Fraction slope;                 // |word|_b / |word|_a
  std::optional<Word> directive;  // absent for the letters a and b

  bool proper() const { return directive.has_value(); }
  std::size_t order() const { return directive ? directive->size() : 0; }
};

/// Letterwise construction: with n = p + q, the i-th letter is a when
/// ip mod n > (i-1)p mod n and b otherwise.
inline ChristoffelWord christoffel_by_slope(const BigInt& p, const BigInt& q,
                                            std::uint64_t budget = default_psi_budget) {
  if (p < 0 || q < 0) fail(ErrorKind::precondition, "slope parts must be non-negative");
  if (p == 0 && q == 0) fail(ErrorKind::precondition, "slope 0/0");
  if (boost::multiprecision::gcd(p, q) != 1) fail(ErrorKind::precondition, "slope not irreducible");
  if (q == 0) return {Word{Letter::b}, Fraction(1, 0), std::nullopt};
  if (p == 0) return {Word{Letter::a}, Fraction(0, 1), std::nullopt};
  check_budget(p + q, budget, "Christoffel word");
  const auto step = static_cast<std::uint64_t>(p);
  const auto n = static_cast<std::uint64_t>(p + q);
  Word w;
  w.reserve(n);
  std::uint64_t r = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t next = (r + step) % n;
    w.push_back(next > r ? Letter::a : Letter::b);
    r = next;
  }
  Fraction slope(p, q);
  Word directive = path_of_fraction(slope, TreeFlavor::stern_brocot);
  return {std::move(w), std::move(slope), std::move(directive)};
}

inline ChristoffelWord christoffel_by_directive(const Word& v, std::uint64_t budget = default_psi_budget) {
  Word w{Letter::a};
  w.append(psi(v, budget));
  w.push_back(Letter::b);
  return {std::move(w), stern_brocot(v), v};
}

/// Directive v with w = a psi(v) b, or nullopt.
inline std::optional<Word> directive_of(const Word& w) {
  if (w.size() < 2 || w.front() != Letter::a || w.back() != Letter::b) return std::nullopt;
  return psi_inverse(w.substr(1, w.size() - 2));
}

inline bool is_central(const Word& w) { return psi_inverse(w).has_value(); }

/// A u PER {ab, ba}.
inline bool is_standard(const Word& w) {
  if (w.size() == 1) return true;
  if (w.size() < 2 || w[w.size() - 2] == w.back()) return false;
  return is_central(w.substr(0, w.size() - 2));
}

/// a PER b u A.
inline bool is_christoffel(const Word& w) { return w.size() == 1 || directive_of(w).has_value(); }

/// Standard factorization (w1, w2) of a proper Christoffel word into
/// Christoffel (Lyndon) words, w1 < w2. For non-constant v it is
/// (a psi(v_+) b, a psi(v^-) b) when v ends in a, swapped when v ends in b.
inline std::pair<ChristoffelWord, ChristoffelWord> lyndon_factorization(const ChristoffelWord& w) {
  if (!w.proper()) fail(ErrorKind::precondition, "single letters have no standard factorization");
  const Word& v = *w.directive;
  const ChristoffelWord letter_a{Word{Letter::a}, Fraction(0, 1), std::nullopt};
  const ChristoffelWord letter_b{Word{Letter::b}, Fraction(1, 0), std::nullopt};
  if (v.empty()) return {letter_a, letter_b};
  if (v.is_constant()) {
    // a^(h+1) b = a . a^h b and a b^(h+1) = a b^h . b
    const ChristoffelWord shorter = christoffel_by_directive(drop_last(v));
    if (v.back() == Letter::a) return {letter_a, shorter};
    return {shorter, letter_b};
  }
  ChristoffelWord from_plus = christoffel_by_directive(plus_prefix(v));
  ChristoffelWord from_minus = christoffel_by_directive(drop_last(v));
  if (v.back() == Letter::a) return {std::move(from_plus), std::move(from_minus)};
  return {std::move(from_minus), std::move(from_plus)};
}

/// s(-1) = b, s(0) = a, s(n) = s(n-1)^c(n) s(n-2); returns the first count
/// terms starting from s(-1).
inline std::vector<Word> standard_by_coefficients(std::span<const long long> c, std::size_t count) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == 0 ? c[i] < 0 : c[i] <= 0)
      fail(ErrorKind::precondition, "coefficients need c1 >= 0 and ci > 0 for i > 1");
  }
  if (count > 2 && c.size() < count - 2) fail(ErrorKind::precondition, "not enough coefficients for the requested count");
  std::vector<Word> out;
  if (count > 0) out.push_back(Word{Letter::b});
  if (count > 1) out.push_back(Word{Letter::a});
  for (std::size_t n = 2; n < count; ++n) {
    const Word& last = out[n - 1];
    const Word& before = out[n - 2];
    const auto reps = static_cast<std::size_t>(c[n - 2]);
    const BigInt predicted = BigInt(last.size()) * reps + before.size();
    check_budget(predicted, default_psi_budget, "standard word");
    Word s = power(last, reps);
    s.append(before);
    out.push_back(std::move(s));
  }
  return out;
}

/// Compares |a psi(va) b| with |a psi(vb) b|: less iff v ends with a.
inline std::strong_ordering length_compare_extension(const Word& v) {
  if (v.empty()) fail(ErrorKind::precondition, "empty word");
  const BigInt with_a = period_pair(v + Letter::a).christoffel_length();
  const BigInt with_b = period_pair(v + Letter::b).christoffel_length();
  if (with_a < with_b) return std::strong_ordering::less;
  if (with_a > with_b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace sturmian
