#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

inline constexpr std::uint64_t default_occurrence_cap = 10'000'000;

/// (w choose u): number of subword occurrences of u in w.
inline BigInt subword_binomial(const Word& w, const Word& u) {
  std::vector<BigInt> ways(u.size() + 1, 0);
  ways[0] = 1;
  for (Letter x : w) {
    for (std::size_t j = u.size(); j > 0; --j)
      if (u[j - 1] == x) ways[j] += ways[j - 1];
  }
  return ways[u.size()];
}

/// Streams every occurrence of u as a subword of w, in increasing
/// lexicographic order of the position tuples.
template <class Visitor>
void for_each_subword_occurrence(const Word& w, const Word& u, Visitor&& visit) {
  const std::size_t m = u.size();
  if (m > w.size()) return;
  // latest[j]: last 0-based index where u[j] can sit and still leave room
  // for u[j+1..] to the right.
  std::vector<std::size_t> latest(m);
  std::size_t pos = w.size();
  for (std::size_t j = m; j-- > 0;) {
    do {
      if (pos == 0) return;
      --pos;
    } while (w[pos] != u[j]);
    latest[j] = pos;
  }
  Occurrence occ;
  occ.positions.resize(m);
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t j, std::size_t from) {
    if (j == m) {
      visit(static_cast<const Occurrence&>(occ));
      return;
    }
    for (std::size_t i = from; i <= latest[j]; ++i) {
      if (w[i] != u[j]) continue;
      occ.positions[j] = i + 1;
      place(j + 1, i + 1);
    }
  };
  if (m == 0) {
    visit(static_cast<const Occurrence&>(occ));
    return;
  }
  place(0, 0);
}

/// Materialises all occurrences; refuses when the count exceeds cap.
inline std::vector<Occurrence> subword_occurrences(const Word& w, const Word& u,
                                                   std::uint64_t cap = default_occurrence_cap) {
  const BigInt total = subword_binomial(w, u);
  if (total > cap)
    fail(ErrorKind::budget, "subword occurrence count " + total.str() + " exceeds cap " + std::to_string(cap));
  std::vector<Occurrence> out;
  out.reserve(static_cast<std::size_t>(total));
  for_each_subword_occurrence(w, u, [&](const Occurrence& o) { out.push_back(o); });
  return out;
}

}  // namespace sturmian
