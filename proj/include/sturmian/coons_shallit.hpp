#pragma once

// |a psi(w) b| = |bwb|_b + sum_{u in G1} |bwb|_u + sum_{u in G2} |a psi(u^) b| |bwb|_u
// where G1 (resp. G2) are the factors of bwb in bA*b with exactly one
// (resp. at least two) a, and u^ is the part of u strictly between its first
// and last a.

#include <algorithm>
#include <map>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

struct Gamma1Term {
  Word factor;
  std::size_t count = 0;
};

struct Gamma2Term {
  Word factor;
  Word inner;  // u^
  BigInt weight;
  std::size_t count = 0;
};

struct CSDecomposition {
  std::size_t base = 0;  // |bwb|_b
  std::vector<Gamma1Term> gamma1_terms;
  std::vector<Gamma2Term> gamma2_terms;

  BigInt total() const {
    BigInt t = base;
    for (const auto& g : gamma1_terms) t += g.count;
    for (const auto& g : gamma2_terms) t += g.weight * g.count;
    return t;
  }
};

namespace detail {
struct ShortlexLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};
}  // namespace detail

/// Terms are listed by factor length, then lexicographically.
inline CSDecomposition cs_decompose(const Word& w) {
  const Word host = Letter::b + w + Letter::b;
  std::map<Word, std::size_t, detail::ShortlexLess> counts;
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (host[i] != Letter::b) continue;
    std::size_t as = 0;
    for (std::size_t j = i + 1; j < host.size(); ++j) {
      if (host[j] == Letter::a) {
        ++as;
      } else if (as > 0) {
        ++counts[host.substr(i, j - i + 1)];
      }
    }
  }
  CSDecomposition out;
  out.base = host.count(Letter::b);
  for (const auto& [u, c] : counts) {
    if (u.count(Letter::a) == 1) {
      out.gamma1_terms.push_back({u, c});
      continue;
    }
    const auto first_a = static_cast<std::size_t>(std::find(u.begin(), u.end(), Letter::a) - u.begin());
    const auto last_a = u.size() - 1 -
                        static_cast<std::size_t>(std::find(u.letters().rbegin(), u.letters().rend(), Letter::a) -
                                                 u.letters().rbegin());
    Word inner = u.substr(first_a + 1, last_a - first_a - 1);
    BigInt weight = period_pair(inner).christoffel_length();
    out.gamma2_terms.push_back({u, std::move(inner), std::move(weight), c});
  }
  return out;
}

}  // namespace sturmian
