#pragma once

// Raney (Calkin-Wilf) and Stern-Brocot labelings of the complete binary tree,
// whose nodes are the words over {a, b} (a = left move, b = right move).

#include <algorithm>

#include "sturmian/bigint.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/stern.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

enum class TreeFlavor { raney, stern_brocot };

/// nu(w) = <bw> + 1; the root is numbered 2.
inline BigInt nu(const Word& w) { return encode(Letter::b + w) + 1; }

/// Drops the leading digit of [n-1]_2.
inline Word nu_inverse(const BigInt& n) {
  if (n < 2) fail(ErrorKind::precondition, "node numbers start at 2");
  return drop_first(decode(n - 1));
}

/// Ra(w) = p_a(w) / p_b(w).
inline Fraction raney(const Word& w) {
  auto pp = period_pair(w);
  return Fraction(std::move(pp.p_a), std::move(pp.p_b));
}

/// Sb(w) = Ra(w~), the slope of a psi(w) b.
inline Fraction stern_brocot(const Word& w) { return raney(reverse(w)); }

/// ra(n) = s(n-1) / s(n).
inline Fraction ra_of(const BigInt& n) {
  if (n < 2) fail(ErrorKind::precondition, "ra(n) needs n >= 2");
  return Fraction(stern(n - 1), stern(n));
}

/// The unique node labelled f, found by undoing the child rules
/// (p/q -> p/(q-p) after a left move, (p-q)/q after a right move), one run
/// of equal moves per division.
inline Word path_of_fraction(const Fraction& f, TreeFlavor flavor) {
  if (f.num() <= 0 || f.den() <= 0) fail(ErrorKind::precondition, "tree labels are positive fractions: " + f.str());
  BigInt p = f.num(), q = f.den();
  std::vector<std::pair<Letter, BigInt>> runs;  // collected from the node up to the root
  while (p != q) {
    if (p < q) {
      BigInt k = (q - 1) / p;
      q -= k * p;
      runs.emplace_back(Letter::a, std::move(k));
    } else {
      BigInt k = (p - 1) / q;
      p -= k * q;
      runs.emplace_back(Letter::b, std::move(k));
    }
  }
  BigInt total = 0;
  for (const auto& r : runs) total += r.second;
  check_budget(total, default_psi_budget, "tree path");
  Word path;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    for (BigInt i = 0; i < it->second; ++i) path.push_back(it->first);
  return flavor == TreeFlavor::raney ? path : reverse(path);
}

struct TreeNode {
  Word path;
  BigInt number;
  Fraction raney;
  Fraction stern_brocot;
};

inline TreeNode tree_node(const Word& path) { return {path, nu(path), raney(path), stern_brocot(path)}; }

}  // namespace sturmian
