#pragma once

// Freely reduced words in the free group F_r = <x_1, ..., x_r>.
//
// A letter is a nonzero int: +i stands for x_i and -i for x_i^{-1}.
// Words are always stored freely reduced.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace palf {

using Letter = int;

class Word {
 public:
  Word() = default;

  // Reduces the letters; throws palf::Error if a letter is 0 or |letter| > rank.
  static Word reduce(std::span<const Letter> letters, int rank);
  static Word reduce(std::initializer_list<Letter> letters, int rank) {
    return reduce(std::span<const Letter>(letters.begin(), letters.size()), rank);
  }
  static Word generator(int index) { return Word(std::vector<Letter>{index}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  int max_index() const;

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);

  // Signed exponent sums, one entry per generator 1..rank.
  std::vector<long> abelianize(int rank) const;

  // "1" for the identity, otherwise e.g. "x1 x2 x1^-1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  friend class WordBuilder;
  std::vector<Letter> letters_;
};

// Appends letters with on-the-fly free cancellation.
class WordBuilder {
 public:
  WordBuilder() = default;
  void reserve(std::size_t n) { buf_.reserve(n); }
  void push(Letter l) {
    if (!buf_.empty() && buf_.back() == -l)
      buf_.pop_back();
    else
      buf_.push_back(l);
  }
  void append(const Word& w) {
    for (Letter l : w.letters()) push(l);
  }
  void append_inverse(const Word& w) {
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
  }
  Word build() && { return Word(std::move(buf_)); }

 private:
  std::vector<Letter> buf_;
};

// Position of a signed generator in the total order x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_key(Letter l) { return l > 0 ? 2 * l - 1 : -2 * l; }

// Strips inverse letter pairs from the two ends.
Word cyclically_reduce(const Word& w);

// Canonical representative of the conjugacy class: the cyclic reduction,
// rotated to the least rotation under letter_key order.
Word cyclic_normal_form(const Word& w);

}  // namespace palf
