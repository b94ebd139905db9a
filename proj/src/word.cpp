#include "palf/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "palf/error.hpp"

namespace palf {

Word Word::reduce(std::span<const Letter> letters, int rank) {
  WordBuilder b;
  b.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || std::abs(l) > rank)
      throw Error("generator index " + std::to_string(l) + " out of range for rank " +
                  std::to_string(rank));
    b.push(l);
  }
  return std::move(b).build();
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out *= rhs;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  std::size_t k = 0;
  while (k < rhs.letters_.size() && !letters_.empty() && letters_.back() == -rhs.letters_[k]) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  rhs.letters_.end());
  return *this;
}

std::vector<long> Word::abelianize(int rank) const {
  std::vector<long> v(static_cast<std::size_t>(rank), 0);
  for (Letter l : letters_) {
    const int i = std::abs(l);
    if (i > rank) throw Error("word exceeds rank " + std::to_string(rank));
    v[static_cast<std::size_t>(i - 1)] += l > 0 ? 1 : -1;
  }
  return v;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (Letter l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << std::abs(l);
    if (l < 0) os << "^-1";
  }
  return os.str();
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
      [](Letter x, Letter y) { return letter_key(x) <=> letter_key(y); });
}

Word cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == -ls[j - 1]) {
    ++i;
    --j;
  }
  WordBuilder b;
  for (std::size_t k = i; k < j; ++k) b.push(ls[k]);
  return std::move(b).build();
}

namespace {

// Start index of the lexicographically least rotation (Booth).
std::size_t least_rotation(const std::vector<int>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

}  // namespace

Word cyclic_normal_form(const Word& w) {
  Word c = cyclically_reduce(w);
  const auto& ls = c.letters();
  if (ls.size() < 2) return c;
  std::vector<int> keys(ls.size());
  std::transform(ls.begin(), ls.end(), keys.begin(), letter_key);
  const std::size_t start = least_rotation(keys) % ls.size();
  WordBuilder b;
  b.reserve(ls.size());
  for (std::size_t k = 0; k < ls.size(); ++k) b.push(ls[(start + k) % ls.size()]);
  return std::move(b).build();
}

}  // namespace palf
