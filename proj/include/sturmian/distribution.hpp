#pragma once

// Length statistics of the Christoffel words a psi(v) b of order k = |v|.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/continuants.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

inline constexpr unsigned default_max_order = 26;

struct HistogramOptions {
  unsigned max_order = default_max_order;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

/// C_k(n) for a fixed order k, keyed by length n.
struct LengthHistogram {
  unsigned order = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  BigInt mass() const {
    BigInt m = 0;
    for (const auto& [n, c] : counts) m += c;
    return m;
  }
  BigInt weighted_mass() const {
    BigInt m = 0;
    for (const auto& [n, c] : counts) m += BigInt(n) * c;
    return m;
  }
  std::uint64_t count(std::uint64_t n) const {
    auto it = counts.find(n);
    return it == counts.end() ? 0 : it->second;
  }
};

namespace detail {
// Depth-first walk over all completions of a directive prefix whose period
// pair is (pa, pb), tallying |a psi(v) b| = pa + pb at depth `remaining` = 0.
inline void tally_lengths(std::uint64_t pa, std::uint64_t pb, unsigned remaining, std::vector<std::uint64_t>& tally) {
  if (remaining == 0) {
    ++tally[pa + pb];
    return;
  }
  tally_lengths(pa, pa + pb, remaining - 1, tally);
  tally_lengths(pa + pb, pb, remaining - 1, tally);
}
}  // namespace detail

/// Enumerates all 2^k directives. The directive space is split into
/// contiguous prefix ranges, each tallied independently and merged in order.
inline LengthHistogram histogram(unsigned k, const HistogramOptions& opts = {}) {
  if (k > opts.max_order)
    fail(ErrorKind::budget, "order " + std::to_string(k) + " needs 2^" + std::to_string(k) + " = " +
                                (BigInt(1) << k).str() + " directive evaluations; limit is order " +
                                std::to_string(opts.max_order));
  const auto max_len = static_cast<std::size_t>(fib(static_cast<long long>(k) + 1));
  const unsigned split = std::min<unsigned>(k, opts.threads > 1 ? std::bit_width(opts.threads) + 1 : 0);
  const std::uint64_t parts = std::uint64_t{1} << split;
  const std::uint64_t workers = std::min<std::uint64_t>(parts, opts.threads);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> tally(max_len + 1, 0);
    for (std::uint64_t prefix = lo; prefix < hi; ++prefix) {
      PeriodPair<std::uint64_t> pp;
      for (unsigned i = split; i-- > 0;) pp.push((prefix >> i) & 1 ? Letter::b : Letter::a);
      detail::tally_lengths(pp.p_a, pp.p_b, k - split, tally);
    }
    return tally;
  };

  std::vector<std::future<std::vector<std::uint64_t>>> jobs;
  for (std::uint64_t t = 0; t < workers; ++t) {
    const std::uint64_t lo = parts * t / workers, hi = parts * (t + 1) / workers;
    jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, run_range, lo, hi));
  }
  std::vector<std::uint64_t> total(max_len + 1, 0);
  for (auto& job : jobs) {
    const auto part = job.get();
    for (std::size_t n = 0; n < part.size(); ++n) total[n] += part[n];
  }
  LengthHistogram h;
  h.order = k;
  for (std::size_t n = 0; n < total.size(); ++n)
    if (total[n] > 0) h.counts.emplace(n, total[n]);
  return h;
}

struct OrderSummary {
  unsigned order = 0;
  std::uint64_t max_count = 0;          // M_k
  std::vector<std::uint64_t> argmax;    // all n with C_k(n) = M_k, ascending
  std::vector<std::uint64_t> missing;   // ML_k, ascending
  std::size_t missing_count() const { return missing.size(); }
};

inline OrderSummary summarize(const LengthHistogram& h) {
  OrderSummary s;
  s.order = h.order;
  for (const auto& [n, c] : h.counts) s.max_count = std::max(s.max_count, c);
  for (const auto& [n, c] : h.counts)
    if (c == s.max_count) s.argmax.push_back(n);
  const auto hi = static_cast<std::uint64_t>(fib(static_cast<long long>(h.order) + 1));
  for (std::uint64_t n = h.order + 2; n <= hi; ++n)
    if (!h.counts.contains(n)) s.missing.push_back(n);
  return s;
}

inline OrderSummary summarize(unsigned k, const HistogramOptions& opts = {}) { return summarize(histogram(k, opts)); }

/// The word of length k in which every letter is followed by its complement.
inline Word alternating(std::size_t k, Letter first) {
  Word w;
  Letter x = first;
  for (std::size_t i = 0; i < k; ++i, x = complement(x)) w.push_back(x);
  return w;
}

/// v_3 = ab^2, v_(k+1) = v_k a for odd k and v_k b for even k.
inline Word almost_alternating(std::size_t k) {
  if (k < 3) fail(ErrorKind::precondition, "almost alternating words start at order 3");
  Word v{Letter::a, Letter::b, Letter::b};
  for (std::size_t j = 3; j < k; ++j) v.push_back(j % 2 == 1 ? Letter::a : Letter::b);
  return v;
}

/// [v] = {v, v~, v-bar, v-bar~} (duplicates collapsed).
inline std::set<Word> class_of(const Word& v) {
  return {v, reverse(v), complement(v), reverse(complement(v))};
}

inline std::uint64_t totient(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::precondition, "totient(0) is undefined");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// C_k(n) for every k and every n <= n_max, as counts[n][k]. Extending a
/// directive strictly increases |a psi(v) b|, so the walk stops at n_max.
inline std::vector<std::map<unsigned, std::uint64_t>> counts_by_length(std::uint64_t n_max) {
  std::vector<std::map<unsigned, std::uint64_t>> counts(n_max + 1);
  auto walk = [&](auto&& self, std::uint64_t pa, std::uint64_t pb, unsigned depth) -> void {
    if (pa + pb > n_max) return;
    ++counts[pa + pb][depth];
    self(self, pa, pa + pb, depth + 1);
    self(self, pa + pb, pb, depth + 1);
  };
  walk(walk, 1, 1, 0);
  return counts;
}

/// sum_k C_k(n) = phi(n) for 2 <= n <= n_max.
inline bool totient_identity_check(std::uint64_t n_max) {
  const auto counts = counts_by_length(n_max);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    std::uint64_t sum = 0;
    for (const auto& [k, c] : counts[n]) sum += c;
    if (sum != totient(n)) return false;
  }
  return true;
}

struct BoundReport {
  unsigned order = 0;
  bool constant_lengths = true;       // constant v => length k + 2, and only those
  bool alternating_lengths = true;    // alternating v => F(k+1), and only those
  bool nonconstant_lower = true;      // length >= 2k + 1, equality iff v in [ab^(k-1)]
  bool nonalternating_upper = true;   // length <= F(k+1) - F(k-4), equality iff v in [v_k]
  bool almost_alternating_value = true;  // |a psi(v_k) b| = F(k+1) - F(k-4)
  bool consecutive_lengths = true;    // 3k-2, 3k-1, 5k-8, 5k-7 occur
  bool missing_lower_bound = true;    // card(ML_k) >= F(k-4) + k - 3

  bool all() const {
    return constant_lengths && alternating_lengths && nonconstant_lower && nonalternating_upper &&
           almost_alternating_value && consecutive_lengths && missing_lower_bound;
  }
};

/// Exhaustive check of the order-k extremal results.
inline BoundReport bound_report(unsigned k, const HistogramOptions& opts = {}) {
  if (k < 3) fail(ErrorKind::precondition, "bound report needs k >= 3");
  if (k > opts.max_order) fail(ErrorKind::budget, "order " + std::to_string(k) + " exceeds limit");
  BoundReport r;
  r.order = k;
  const BigInt fk1 = fib(k + 1);
  const BigInt upper = fk1 - fib(static_cast<long long>(k) - 4);
  const auto min_class = class_of(Word{Letter::a} + Word(k - 1, Letter::b));
  const Word vk = almost_alternating(k);
  const auto max_class = class_of(vk);
  std::set<std::uint64_t> lengths;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    std::vector<Letter> letters(k);
    for (unsigned i = 0; i < k; ++i) letters[i] = (code >> (k - 1 - i)) & 1 ? Letter::b : Letter::a;
    const Word v(std::move(letters));
    const BigInt len = period_pair(v).christoffel_length();
    lengths.insert(static_cast<std::uint64_t>(len));
    const bool is_const = v.is_constant();
    const bool is_alt = v == alternating(k, v.front());
    if (is_const != (len == k + 2)) r.constant_lengths = false;
    if (is_alt != (len == fk1)) r.alternating_lengths = false;
    if (!is_const) {
      if (len < 2 * k + 1) r.nonconstant_lower = false;
      if ((len == 2 * k + 1) != min_class.contains(v)) r.nonconstant_lower = false;
    }
    if (!is_alt) {
      if (len > upper) r.nonalternating_upper = false;
      if ((len == upper) != max_class.contains(v)) r.nonalternating_upper = false;
    }
  }
  r.almost_alternating_value = period_pair(vk).christoffel_length() == upper;
  for (std::uint64_t n : {3ull * k - 2, 3ull * k - 1, 5ull * k - 8, 5ull * k - 7})
    if (!lengths.contains(n)) r.consecutive_lengths = false;
  std::uint64_t missing = 0;
  for (std::uint64_t n = k + 2; n <= static_cast<std::uint64_t>(fk1); ++n)
    if (!lengths.contains(n)) ++missing;
  r.missing_lower_bound = BigInt(missing) >= fib(static_cast<long long>(k) - 4) + (k - 3);
  return r;
}

/// Under-approximation of the golden ratio to 40 significant digits.
inline BigRational golden_ratio_lower() {
  return BigRational(BigInt("1618033988749894848204586834365638117720"), BigInt(10) * pow(BigInt(10), 38));
}

/// Exact rational 2^k / g^(k+3) with g replaced by its under-approximation,
/// which is no smaller than the real bound (1/g^3)(2/g)^k on M_k.
inline BigRational mk_lower_bound(unsigned k) {
  const BigRational g = golden_ratio_lower();
  BigRational denom = 1;
  for (unsigned i = 0; i < k + 3; ++i) denom *= g;
  return BigRational(BigInt(1) << k) / denom;
}

}  // namespace sturmian
