#pragma once

// Right palindromic closure, the palindromization map psi, its inverse, the
// morphisms mu_v and the period pair (p_a(v), p_b(v)) = (|mu_v(a)|, |mu_v(b)|).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Largest word (in letters) psi, mu and friends agree to materialise.
inline constexpr std::uint64_t default_psi_budget = std::uint64_t{1} << 30;

template <class Int = BigInt>
struct PeriodPair {
  Int p_a{1};
  Int p_b{1};

  const Int& operator[](Letter x) const { return x == Letter::a ? p_a : p_b; }
  Int& operator[](Letter x) { return x == Letter::a ? p_a : p_b; }

  /// |psi(v)| = p_a + p_b - 2.
  Int central_length() const { return p_a + p_b - 2; }
  /// |a psi(v) b| = p_a + p_b.
  Int christoffel_length() const { return p_a + p_b; }

  void push(Letter x) { (*this)[complement(x)] += (*this)[x]; }

  friend bool operator==(const PeriodPair&, const PeriodPair&) = default;
};

/// p_x(wx) = p_x(w), p_y(wx) = p_x(w) + p_y(w), starting from (1, 1).
template <class Int = BigInt>
PeriodPair<Int> period_pair(const Word& v) {
  PeriodPair<Int> pp;
  for (Letter x : v) pp.push(x);
  return pp;
}

/// w^(+) : shortest palindrome having w as a prefix.
inline Word pal_closure(const Word& w) {
  // Longest palindromic suffix Q of w is the longest prefix of w~ that is a
  // suffix of w; run KMP of w~ against w.
  const Word r = reverse(w);
  const auto border = detail::borders(r);
  std::size_t k = 0;
  for (Letter x : w) {
    while (k > 0 && (k == r.size() || r[k] != x)) k = border[k];
    if (k < r.size() && r[k] == x) ++k;
  }
  const std::size_t u_len = w.size() - k;
  Word out = w;
  out.reserve(w.size() + u_len);
  for (std::size_t i = u_len; i-- > 0;) out.push_back(w[i]);
  return out;
}

/// Incremental palindromization. Appending x to the directive u turns
/// psi(u) into psi(u) x s, where s is the suffix of psi(u) following
/// psi(u') and u' is the prefix of u before its last x (s = psi(u) when x
/// does not occur in u).
class PsiBuilder {
 public:
  explicit PsiBuilder(std::size_t reserve = 0) { word_.reserve(reserve); }

  void push(Letter x) {
    const auto len = static_cast<std::int64_t>(word_.size());
    auto& last = last_length_[digit(x)];
    const std::int64_t from = last + 1;
    last = len;
    word_.push_back(x);
    for (std::int64_t i = from; i < len; ++i) word_.push_back(word_[static_cast<std::size_t>(i)]);
    directive_.push_back(x);
  }

  const Word& word() const noexcept { return word_; }
  const Word& directive() const noexcept { return directive_; }
  Word release() && { return std::move(word_); }

 private:
  Word word_;
  Word directive_;
  // |psi| of the directive prefix preceding the last a (resp. b); -1 if none.
  std::array<std::int64_t, 2> last_length_{-1, -1};
};

inline void check_budget(const BigInt& predicted, std::uint64_t budget, const char* what) {
  if (predicted > budget)
    fail(ErrorKind::budget, std::string(what) + " would have " + predicted.str() + " letters, budget is " +
                                std::to_string(budget));
}

inline Word psi(const Word& v, std::uint64_t budget = default_psi_budget) {
  const BigInt predicted = period_pair(v).central_length();
  check_budget(predicted, budget, "psi");
  PsiBuilder builder(static_cast<std::size_t>(predicted));
  for (Letter x : v) builder.push(x);
  return std::move(builder).release();
}

/// Length-n prefix of psi(pre period^omega).
inline Word psi_prefix(const Word& preperiod, const Word& period, std::int64_t n,
                       std::uint64_t budget = default_psi_budget) {
  if (n < 0) fail(ErrorKind::precondition, "negative prefix length");
  if (period.empty()) fail(ErrorKind::precondition, "empty period in directive");
  if (static_cast<std::uint64_t>(n) > budget) check_budget(BigInt(n), budget, "psi prefix");
  const auto target = static_cast<std::size_t>(n);
  PsiBuilder builder(2 * target + 2);
  for (std::size_t i = 0; builder.word().size() < target; ++i) {
    builder.push(i < preperiod.size() ? preperiod[i] : period[(i - preperiod.size()) % period.size()]);
  }
  Word w = std::move(builder).release();
  w.resize(target);
  return w;
}

/// Directive word of a central word, or nullopt when w is not central.
inline std::optional<Word> psi_inverse(const Word& w) {
  if (!w.is_palindrome()) return std::nullopt;
  // Palindromic prefixes of a palindrome are its borders; for central words
  // they are psi of the directive prefixes, each followed by the next letter.
  const auto border = detail::borders(w);
  std::vector<std::size_t> chain;
  for (std::size_t len = w.size(); len > 0; len = border[len]) chain.push_back(border[len]);
  Word v;
  for (std::size_t i = chain.size(); i-- > 0;) v.push_back(w[chain[i]]);
  if (period_pair(v).central_length() != w.size()) return std::nullopt;
  if (psi(v) != w) return std::nullopt;
  return v;
}

/// mu_v(w) with mu_v = mu_{x1} o ... o mu_{xn}, mu_x(x) = x, mu_x(y) = xy.
inline Word mu(const Word& v, const Word& w, std::uint64_t budget = default_psi_budget) {
  const auto pp = period_pair(v);
  BigInt predicted = 0;
  for (Letter x : w) predicted += pp[x];
  check_budget(predicted, budget, "mu");
  Word cur = w;
  for (std::size_t i = v.size(); i-- > 0;) {
    const Letter x = v[i];
    Word next;
    next.reserve(cur.size() * 2);
    for (Letter c : cur) {
      if (c != x) next.push_back(x);
      next.push_back(c);
    }
    cur = std::move(next);
  }
  return cur;
}

/// pi(psi(v)) = p_{last letter}(v); 1 for the empty directive.
inline BigInt min_period_central(const Word& v) {
  if (v.empty()) return 1;
  return period_pair(v)[v.back()];
}

}  // namespace sturmian
