#pragma once

#include <initializer_list>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// K[x0, ..., xn]: K[] = 1, K[x0] = x0,
/// K[x0..xn] = xn K[x0..x(n-1)] + K[x0..x(n-2)]. Entries may be negative.
template <class Range>
BigInt continuant(const Range& xs) {
  BigInt prev = 0;
  BigInt cur = 1;
  for (const auto& x : xs) {
    BigInt next = BigInt(x) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline BigInt continuant(std::initializer_list<long long> xs) { return continuant<std::initializer_list<long long>>(xs); }

/// [a0; a1, ..., an] = K[a0..an] / K[a1..an], reduced, sign on the numerator.
template <class Range>
Fraction cf_value(const Range& coeffs) {
  std::vector<BigInt> xs;
  for (const auto& c : coeffs) xs.emplace_back(c);
  if (xs.empty()) fail(ErrorKind::precondition, "empty continued fraction");
  const BigInt num = continuant(xs);
  const BigInt den = continuant(std::vector<BigInt>(xs.begin() + 1, xs.end()));
  if (den == 0) fail(ErrorKind::precondition, "continued fraction has zero denominator");
  return Fraction(num, den);
}

inline Fraction cf_value(std::initializer_list<long long> xs) { return cf_value<std::initializer_list<long long>>(xs); }

/// F(-1) = F(0) = 1, F(n+1) = F(n) + F(n-1).
inline BigInt fib(long long n) {
  if (n < -1) fail(ErrorKind::precondition, "Fibonacci index below -1");
  BigInt prev = 1, cur = 1;
  for (long long i = 0; i < n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct MirrorValues {
  Fraction sb;
  Fraction ra;
};

/// Stern-Brocot and Raney labels of v read off its integral representation:
/// Sb = [a0; a1, ..., a(n-1), an + 1], Ra = [an; a(n-1), ..., a1, a0 + 1].
inline MirrorValues mirror_formula(const Word& v) {
  const auto runs = integral_rep(v).runs;
  std::vector<BigInt> xs(runs.begin(), runs.end());
  if (xs.size() == 1) {
    Fraction f(xs[0] + 1, BigInt(1));
    return {f, f};
  }
  std::vector<BigInt> sb = xs;
  sb.back() += 1;
  std::vector<BigInt> ra(xs.rbegin(), xs.rend());
  ra.back() += 1;
  return {cf_value(sb), cf_value(ra)};
}

struct LengthAndPeriod {
  BigInt length;
  BigInt period;
  friend bool operator==(const LengthAndPeriod&, const LengthAndPeriod&) = default;
};

/// (|a psi(v) b|, pi(psi(v))) from the reduced integral representation
/// (a0, ..., an) of v:
///   n = 0: (K[a0 + 2], 1)
///   n > 0: (K[a0 + 1, a1, ..., a(n-1), an + 1], K[a0 + 1, a1, ..., a(n-1)])
inline LengthAndPeriod christoffel_length_cf(const Word& v) {
  const auto reduced = integral_rep(v).reduced();
  std::vector<BigInt> xs(reduced.begin(), reduced.end());
  if (xs.size() == 1) return {xs[0] + 2, 1};
  xs.front() += 1;
  std::vector<BigInt> head(xs.begin(), xs.end() - 1);
  xs.back() += 1;
  return {continuant(xs), continuant(head)};
}

}  // namespace sturmian
