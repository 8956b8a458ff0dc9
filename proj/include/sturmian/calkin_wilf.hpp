#pragma once

// Subword occurrences of the family b(ab)* and the ordering of those
// occurrences that spells out standard words.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/subword.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Total number of subword occurrences in w of the words of b(ab)*.
/// With initial_only, only occurrences using position 1 are counted.
inline BigInt alternating_subword_count(const Word& w, bool initial_only = false) {
  // ends_b: partial occurrences ending on a matched b (complete words);
  // ends_a: partial occurrences of b(ab)*a.
  BigInt ends_b = 0, ends_a = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::b) {
      ends_b += ends_a;
      if (!initial_only || i == 0) ends_b += 1;
    } else {
      ends_a += ends_b;
    }
  }
  return ends_b;
}

/// Initial occurrences of b(ab)* in bvb; equals |a psi(v) b|_a.
inline BigInt initial_subword_count(const Word& v) {
  return alternating_subword_count(Letter::b + v + Letter::b, true);
}

/// All occurrences of b(ab)* in bvb; equals |a psi(v) b|.
inline BigInt cw_length(const Word& v) { return alternating_subword_count(Letter::b + v + Letter::b); }

/// All occurrences of b(ab)* in b v_+ b; equals pi(psi(v)) for non-constant v.
inline BigInt cw_period(const Word& v) {
  if (v.is_constant()) fail(ErrorKind::precondition, "cw_period needs a non-constant word");
  return cw_length(plus_prefix(v));
}

/// An occurrence of a word of b(ab)* together with its sort key (the
/// reversed position tuple) and its marker (a iff the occurrence is initial).
struct MarkedOccurrence {
  Occurrence occurrence;
  std::vector<std::size_t> reversed_key;
  Letter marker = Letter::b;
};

/// Streams every occurrence of b(ab)* as a subword of host.
template <class Visitor>
void for_each_alternating_occurrence(const Word& host, Visitor&& visit) {
  Occurrence occ;
  auto extend = [&](auto&& self, std::size_t from, Letter need) -> void {
    for (std::size_t i = from; i < host.size(); ++i) {
      if (host[i] != need) continue;
      occ.positions.push_back(i + 1);
      if (need == Letter::b) visit(static_cast<const Occurrence&>(occ));
      self(self, i + 1, complement(need));
      occ.positions.pop_back();
    }
  };
  extend(extend, 0, Letter::b);
}

struct CalkinWilfTrace {
  Word markers;
  std::vector<MarkedOccurrence> trace;
};

/// Sorts the reversed occurrences of b(ab)* in bwb in decreasing
/// lexicographic order (a proper prefix is smaller) and marks each with a
/// (initial) or b (non-initial). The marker word is psi(w)ba.
inline CalkinWilfTrace noncommutative_cw(const Word& w, std::uint64_t cap = default_occurrence_cap) {
  const BigInt predicted = period_pair(w).christoffel_length();
  if (predicted > cap)
    fail(ErrorKind::budget, "occurrence table would have " + predicted.str() + " rows, cap is " + std::to_string(cap));
  const Word host = Letter::b + w + Letter::b;
  CalkinWilfTrace out;
  out.trace.reserve(static_cast<std::size_t>(predicted));
  for_each_alternating_occurrence(host, [&](const Occurrence& occ) {
    MarkedOccurrence m;
    m.occurrence = occ;
    m.reversed_key.assign(occ.positions.rbegin(), occ.positions.rend());
    m.marker = occ.initial() ? Letter::a : Letter::b;
    out.trace.push_back(std::move(m));
  });
  std::sort(out.trace.begin(), out.trace.end(),
            [](const MarkedOccurrence& x, const MarkedOccurrence& y) { return x.reversed_key > y.reversed_key; });
  out.markers.reserve(out.trace.size());
  for (const auto& m : out.trace) out.markers.push_back(m.marker);
  return out;
}

}  // namespace sturmian
