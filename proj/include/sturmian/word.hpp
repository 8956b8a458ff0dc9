#pragma once

// Binary words over the ordered alphabet {a < b} and their elementary
// combinatorics: reversal, complement, integer encodings, factors, periods,
// Lyndon words and run-length (integral) representations.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/error.hpp"

namespace sturmian {

enum class Letter : std::uint8_t { a = 0, b = 1 };

constexpr Letter complement(Letter x) noexcept { return x == Letter::a ? Letter::b : Letter::a; }

constexpr char to_char(Letter x) noexcept { return x == Letter::a ? 'a' : 'b'; }

constexpr unsigned digit(Letter x) noexcept { return static_cast<unsigned>(x); }

/// Text spellings accepted for words: letters a/b, or digits 0/1.
enum class Alphabet { ab, digits };

class Word {
 public:
  using value_type = Letter;
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  Word(std::size_t count, Letter x) : letters_(count, x) {}

  /// Parses a word; "eps" and "" denote the empty word.
  static Word parse(std::string_view text, Alphabet alphabet = Alphabet::ab) {
    Word w;
    if (text == "eps") return w;
    w.letters_.reserve(text.size());
    const char zero = alphabet == Alphabet::ab ? 'a' : '0';
    const char one = alphabet == Alphabet::ab ? 'b' : '1';
    for (char c : text) {
      if (c == zero) {
        w.letters_.push_back(Letter::a);
      } else if (c == one) {
        w.letters_.push_back(Letter::b);
      } else {
        fail(ErrorKind::parse, "invalid letter '" + std::string(1, c) + "' in word '" +
                                   std::string(text) + "'");
      }
    }
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void reserve(std::size_t n) { letters_.reserve(n); }
  void push_back(Letter x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }
  void resize(std::size_t n) { letters_.resize(n); }
  void append(const Word& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    pos = std::min(pos, size());
    len = std::min(len, size() - pos);
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }

  std::size_t count(Letter x) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
  }

  bool is_palindrome() const { return std::equal(begin(), begin() + size() / 2, letters_.rbegin()); }

  /// Constant means a power of a single letter; the empty word is constant.
  bool is_constant() const {
    return std::adjacent_find(begin(), end(), std::not_equal_to<>()) == end();
  }

  bool starts_with(const Word& p) const {
    return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
  }

  std::string str(Alphabet alphabet = Alphabet::ab) const {
    std::string s;
    s.reserve(size());
    for (Letter x : letters_) {
      s.push_back(alphabet == Alphabet::ab ? to_char(x) : static_cast<char>('0' + digit(x)));
    }
    return s;
  }

  /// Lexicographic order induced by a < b; a proper prefix is smaller.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend Word operator+(Word lhs, Letter x) {
    lhs.push_back(x);
    return lhs;
  }
  friend Word operator+(Letter x, const Word& rhs) {
    Word w;
    w.reserve(rhs.size() + 1);
    w.push_back(x);
    w.append(rhs);
    return w;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

 private:
  std::vector<Letter> letters_;
};

inline Word power(const Word& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.append(w);
  return out;
}

/// Calls f on every word of length n, in lexicographic order.
template <class F>
void for_each_word(std::size_t n, F&& f) {
  std::vector<Letter> letters(n, Letter::a);
  while (true) {
    f(Word(letters));
    std::size_t i = n;
    while (i > 0 && letters[i - 1] == Letter::b) letters[--i] = Letter::a;
    if (i == 0) return;
    letters[i - 1] = Letter::b;
  }
}

/// Calls f on every word of length at most n.
template <class F>
void for_each_word_up_to(std::size_t n, F&& f) {
  for (std::size_t len = 0; len <= n; ++len) for_each_word(len, f);
}

namespace literals {
inline Word operator""_w(const char* text, std::size_t len) {
  return Word::parse(std::string_view(text, len));
}
}  // namespace literals

inline Word complement(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  for (Letter& x : out) x = complement(x);
  return Word(std::move(out));
}

inline Word reverse(const Word& w) { return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend())); }

/// v^- : v without its last letter.
inline Word drop_last(const Word& v) {
  if (v.empty()) fail(ErrorKind::precondition, "empty word");
  return v.substr(0, v.size() - 1);
}

/// ^-v : v without its first letter.
inline Word drop_first(const Word& v) {
  if (v.empty()) fail(ErrorKind::precondition, "empty word");
  return v.substr(1);
}

/// v_+ : longest prefix of v immediately followed by the complement of the
/// last letter of v.
inline Word plus_prefix(const Word& v) {
  if (v.is_constant()) fail(ErrorKind::precondition, "undefined for constant word");
  const Letter target = complement(v.back());
  std::size_t i = v.size() - 1;
  while (v[i] != target) --i;
  return v.substr(0, i);
}

/// _+v : longest suffix of v immediately preceded by the complement of the
/// first letter of v.
inline Word plus_suffix(const Word& v) {
  if (v.is_constant()) fail(ErrorKind::precondition, "undefined for constant word");
  const Letter target = complement(v.front());
  std::size_t i = 0;
  while (v[i] != target) ++i;
  return v.substr(i + 1);
}

/// <w> : base-2 value with a = 0, b = 1.
inline BigInt encode(const Word& w) {
  BigInt n = 0;
  for (Letter x : w) {
    n <<= 1;
    n += digit(x);
  }
  return n;
}

/// [n]_2 : binary expansion; decode(0) is the single letter a.
inline Word decode(const BigInt& n) {
  if (n < 0) fail(ErrorKind::precondition, "decode of a negative integer");
  if (n == 0) return Word{Letter::a};
  const std::size_t bits = msb(n) + 1;
  Word w;
  w.reserve(bits);
  for (std::size_t i = bits; i-- > 0;) w.push_back(bit_test(n, static_cast<unsigned>(i)) ? Letter::b : Letter::a);
  return w;
}

/// |w|_u : number of (possibly overlapping) factor occurrences of u in w.
inline std::size_t factor_count(const Word& w, const Word& u) {
  if (u.empty()) fail(ErrorKind::precondition, "empty factor");
  std::size_t count = 0;
  for (auto it = w.begin(); (it = std::search(it, w.end(), u.begin(), u.end())) != w.end(); ++it) ++count;
  return count;
}

namespace detail {
// KMP failure function: border[i] is the longest proper border of w[0..i).
inline std::vector<std::size_t> borders(const Word& w) {
  std::vector<std::size_t> border(w.size() + 1, 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = border[i];
    while (k > 0 && w[i] != w[k]) k = border[k];
    if (w[i] == w[k]) ++k;
    border[i + 1] = k;
  }
  return border;
}
}  // namespace detail

/// pi(w) : smallest period; pi(eps) = 1.
inline std::size_t min_period(const Word& w) {
  if (w.empty()) return 1;
  return w.size() - detail::borders(w).back();
}

inline std::strong_ordering lex_compare(const Word& u, const Word& v) { return u <=> v; }

/// Non-empty and strictly smaller than each of its proper suffixes.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  std::size_t i = 0;
  for (std::size_t j = 1; j < w.size(); ++j) {
    if (w[i] < w[j]) {
      i = 0;
    } else if (w[i] == w[j]) {
      ++i;
    } else {
      return false;
    }
  }
  return i == 0;
}

/// Run-length list (a0, a1, ..., an) of w = b^a0 a^a1 b^a2 ... a^a(n-1) b^an,
/// n even, interior entries positive.
struct IntegralRep {
  std::vector<std::size_t> runs{0};

  bool valid() const {
    if (runs.empty() || runs.size() % 2 == 0) return false;
    for (std::size_t i = 1; i + 1 < runs.size(); ++i)
      if (runs[i] == 0) return false;
    return true;
  }

  /// Drops a trailing zero run (the reduced representation).
  std::vector<std::size_t> reduced() const {
    std::vector<std::size_t> r = runs;
    if (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
  }

  friend bool operator==(const IntegralRep&, const IntegralRep&) = default;
};

inline IntegralRep integral_rep(const Word& w) {
  IntegralRep rep;
  rep.runs.assign(1, 0);
  Letter expected = Letter::b;
  for (Letter x : w) {
    if (x != expected) {
      rep.runs.push_back(0);
      expected = x;
    }
    ++rep.runs.back();
  }
  if (rep.runs.size() % 2 == 0) rep.runs.push_back(0);
  return rep;
}

inline Word word_of(const IntegralRep& rep) {
  if (!rep.valid()) fail(ErrorKind::precondition, "malformed integral representation");
  Word w;
  for (std::size_t i = 0; i < rep.runs.size(); ++i) {
    const Letter x = i % 2 == 0 ? Letter::b : Letter::a;
    for (std::size_t j = 0; j < rep.runs[i]; ++j) w.push_back(x);
  }
  return w;
}

/// A witness (j1 < ... < jm) of a subword embedding, 1-based positions.
struct Occurrence {
  std::vector<std::size_t> positions;

  bool initial() const { return !positions.empty() && positions.front() == 1; }
  bool final_in(std::size_t host_length) const {
    return !positions.empty() && positions.back() == host_length;
  }

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

}  // namespace sturmian
