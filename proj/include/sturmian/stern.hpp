#pragma once

// Stern's diatomic sequence s(0) = 0, s(1) = 1, s(2n) = s(n),
// s(2n+1) = s(n) + s(n+1), and its independent evaluators.

#include <bit>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/calkin_wilf.hpp"
#include "sturmian/continuants.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Thread-safe memo table for s(n), n < capacity. Values below 2^32 fit in
/// 32 bits (s(n) <= F(32) for n < 2^32).
class SternCache {
 public:
  explicit SternCache(std::size_t capacity = std::size_t{1} << 20) : capacity_(capacity) {
    table_ = {0, 1};
  }

  std::size_t capacity() const noexcept { return capacity_; }

  std::optional<std::uint32_t> lookup(std::uint64_t n) {
    if (n >= capacity_) return std::nullopt;
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    const std::size_t want = std::min<std::size_t>(capacity_, std::max<std::size_t>(n + 1, 2 * table_.size()));
    for (std::size_t m = table_.size(); m < want; ++m)
      table_.push_back(m % 2 == 0 ? table_[m / 2] : table_[m / 2] + table_[m / 2 + 1]);
    return table_[n];
  }

 private:
  std::size_t capacity_;
  std::shared_mutex mutex_;
  std::vector<std::uint32_t> table_;
};

inline SternCache& stern_cache() {
  static SternCache cache;
  return cache;
}

/// s(n) by descent over the bits of n, carrying (s(m), s(m+1)).
inline BigInt stern_by_descent(const BigInt& n) {
  if (n < 0) fail(ErrorKind::precondition, "stern of a negative integer");
  BigInt lo = 0, hi = 1;
  if (n == 0) return lo;
  for (std::size_t i = msb(n) + 1; i-- > 0;) {
    if (bit_test(n, static_cast<unsigned>(i))) {
      lo += hi;
    } else {
      hi += lo;
    }
  }
  return lo;
}

inline BigInt stern(const BigInt& n) {
  if (n < 0) fail(ErrorKind::precondition, "stern of a negative integer");
  if (n < stern_cache().capacity()) {
    if (auto v = stern_cache().lookup(static_cast<std::uint64_t>(n))) return *v;
  }
  return stern_by_descent(n);
}

inline BigInt stern(std::uint64_t n) { return stern(BigInt(n)); }

/// Odd n = <bwb> maps to |a psi(w) b| (period pair sum); even n halves.
inline BigInt stern_via_christoffel(BigInt n) {
  if (n < 0) fail(ErrorKind::precondition, "stern of a negative integer");
  if (n == 0) return 0;
  while (!bit_test(n, 0)) n >>= 1;
  if (n == 1) return 1;
  const Word bits = decode(n);
  return period_pair(bits.substr(1, bits.size() - 2)).christoffel_length();
}

/// Number of subword occurrences of b(ab)* in [n]_2.
inline BigInt stern_via_subwords(const BigInt& n) {
  if (n < 0) fail(ErrorKind::precondition, "stern of a negative integer");
  if (n == 0) return 0;
  return alternating_subword_count(decode(n));
}

inline unsigned ruler(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::precondition, "ruler(0) is undefined");
  return static_cast<unsigned>(std::countr_zero(n));
}

/// zeta(n) = (-1)^(n+1) (2 e(n) + 1).
inline long long zeta(std::uint64_t n) {
  const long long magnitude = 2 * static_cast<long long>(ruler(n)) + 1;
  return n % 2 == 1 ? magnitude : -magnitude;
}

/// s(n) = (-1)^floor((n-1)/2) K[zeta(1), ..., zeta(n-1)], n > 1.
inline BigInt stern_via_zeta(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::precondition, "zeta-continuant formula needs n > 1");
  BigInt prev = 0, cur = 1;
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt next = zeta(i) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return ((n - 1) / 2) % 2 == 0 ? cur : BigInt(-cur);
}

/// s(nu(w)) from the integral representation (a0, ..., an) of w:
/// K[a0 + 1, a1, ..., a(n-1)] for n > 0, and 1 for n = 0.
inline BigInt stern_via_integral_continuant(const Word& w) {
  const auto runs = integral_rep(w).runs;
  if (runs.size() == 1) return 1;
  std::vector<BigInt> xs(runs.begin(), runs.end() - 1);
  xs.front() += 1;
  return continuant(xs);
}

/// R(n): the integer whose binary expansion is [n]_2 reversed.
inline BigInt reverse_bits(const BigInt& n) {
  if (n < 0) fail(ErrorKind::precondition, "reverse_bits of a negative integer");
  if (n == 0) return 0;
  return encode(reverse(decode(n)));
}

struct DeltaExpansion {
  std::uint64_t n = 0;
  unsigned length = 0;                 // L(n) = ceil(log2 n) - 1
  std::vector<std::uint64_t> deltas;   // delta_k(n), k = 1..L(n)
  std::vector<BigInt> terms;           // s(2^(k-1) + delta_k(n))

  BigInt sum() const {
    BigInt total = 2;
    for (const auto& t : terms) total += t;
    return total;
  }
};

/// s(2n - 1) = 2 + sum_{k=1}^{L(n)} s(2^(k-1) + delta_k(n)), n > 1.
inline DeltaExpansion delta_expansion(std::uint64_t n) {
  if (n <= 1) fail(ErrorKind::precondition, "delta expansion needs n > 1");
  if (n > (std::uint64_t{1} << 62)) fail(ErrorKind::precondition, "delta expansion argument too large");
  DeltaExpansion out;
  out.n = n;
  out.length = static_cast<unsigned>(std::bit_width(n - 1)) - 1;
  const std::uint64_t base = n - (std::uint64_t{1} << out.length) - 1;
  for (unsigned k = 1; k <= out.length; ++k) {
    const std::uint64_t d = (base >> (out.length - k)) - (base >> (out.length - k + 1));
    out.deltas.push_back(d);
    out.terms.push_back(stern((std::uint64_t{1} << (k - 1)) + d));
  }
  return out;
}

/// s(n) = alpha_b(n) + sum over factors ub of [n]_2 with u in bA* of s(<u-bar>).
inline BigInt coons_shallit_value(const BigInt& n) {
  if (n < 0) fail(ErrorKind::precondition, "negative argument");
  const Word bits = decode(n);
  BigInt total = bits.count(Letter::b);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != Letter::b) continue;
    for (std::size_t j = i + 1; j < bits.size(); ++j) {
      if (bits[j] == Letter::b) total += stern(encode(complement(bits.substr(i, j - i))));
    }
  }
  return total;
}

inline bool coons_shallit_check(const BigInt& n) { return coons_shallit_value(n) == stern(n); }

}  // namespace sturmian
