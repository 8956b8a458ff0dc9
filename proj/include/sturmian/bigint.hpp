#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "sturmian/error.hpp"

namespace sturmian {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) fail(ErrorKind::parse, "empty integer");
  std::size_t i = text.front() == '-' ? 1 : 0;
  if (i == text.size()) fail(ErrorKind::parse, "malformed integer '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      fail(ErrorKind::parse, "malformed integer '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

/// Irreducible fraction num/den with den >= 0 and the sign carried by the
/// numerator. 1/0 is admitted as the slope of the letter b.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}

  Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0) fail(ErrorKind::precondition, "fraction 0/0");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  template <class I>
    requires std::is_integral_v<I>
  Fraction(I num, I den) : Fraction(BigInt(num), BigInt(den)) {}

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  Fraction reciprocal() const { return Fraction(den_, num_); }

  BigRational to_rational() const {
    if (den_ == 0) fail(ErrorKind::precondition, "1/0 has no rational value");
    return BigRational(num_, den_);
  }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// Parses "p/q" or a bare integer "p" (read as p/1). Any common factor is
  /// rejected so callers can insist on irreducible input.
  static Fraction parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Fraction(parse_bigint(text), BigInt(1));
    return Fraction(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

 private:
  BigInt num_;
  BigInt den_;
};

/// Checks that "p/q" is written in lowest terms, without normalising it.
inline bool is_irreducible_text(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return true;
  BigInt p = parse_bigint(text.substr(0, slash));
  BigInt q = parse_bigint(text.substr(slash + 1));
  return boost::multiprecision::gcd(abs(p), abs(q)) == 1;
}

}  // namespace sturmian
