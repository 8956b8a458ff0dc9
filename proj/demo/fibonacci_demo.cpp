// Walks the directive (ab)^k: the central words grow into the Fibonacci word,
// their Christoffel lengths are Fibonacci numbers and Stern's sequence
// reaches them at <b (ab)^k b>.

#include <iostream>

#include "sturmian/christoffel.hpp"
#include "sturmian/continuants.hpp"
#include "sturmian/stern.hpp"

int main() {
  using namespace sturmian;
  Word v;
  for (unsigned k = 0; k <= 10; ++k) {
    const Word central = psi(v);
    const BigInt n = encode(Letter::b + v + Letter::b);
    std::cout << "v = " << (v.empty() ? "eps" : v.str()) << "\n  psi(v) = " << central
              << "\n  |a psi(v) b| = " << central.size() + 2 << " = F(" << k + 1 << ") = " << fib(k + 1)
              << "\n  s(" << n << ") = " << stern(n) << '\n';
    v.push_back(k % 2 == 0 ? Letter::a : Letter::b);
  }
  const Word fib_prefix = psi_prefix(Word{}, Word{Letter::a, Letter::b}, 34);
  std::cout << "Fibonacci word prefix: " << fib_prefix << '\n';
}
