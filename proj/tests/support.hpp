#pragma once

#include <random>
#include <vector>

#include "palf/curve.hpp"
#include "palf/fibration.hpp"

namespace testing_support {

inline std::vector<palf::Generator> all_twists(const palf::Surface& s) {
  std::vector<palf::Generator> out;
  for (int lo = 1; lo <= s.holes(); ++lo)
    for (int hi = lo; hi <= s.holes(); ++hi)
      for (int sign : {+1, -1}) out.push_back(palf::Generator::twist(lo, hi, sign));
  return out;
}

inline std::vector<palf::Generator> all_half_twists(const palf::Surface& s) {
  std::vector<palf::Generator> out;
  for (int i = 1; i + 1 <= s.holes(); ++i)
    for (int sign : {+1, -1}) out.push_back(palf::Generator::half_twist(i, sign));
  return out;
}

inline std::vector<palf::Generator> random_word(std::mt19937& rng, const std::vector<palf::Generator>& pool,
                                                std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<palf::Generator> w(len(rng));
  for (auto& g : w) g = pool[pick(rng)];
  return w;
}

inline std::vector<palf::Generator> random_twist_word(std::mt19937& rng, const palf::Surface& s,
                                                      std::size_t max_len) {
  return random_word(rng, all_twists(s), max_len);
}

// A curve c(lo,hi) moved by a short random word of twists and half twists.
inline palf::Curve random_curve(std::mt19937& rng, const palf::Surface& s, std::size_t max_len = 3) {
  std::uniform_int_distribution<int> hole(1, s.holes());
  int lo = hole(rng), hi = hole(rng);
  if (lo > hi) std::swap(lo, hi);
  auto pool = all_twists(s);
  const auto halves = all_half_twists(s);
  pool.insert(pool.end(), halves.begin(), halves.end());
  return palf::Curve(s, lo, hi, palf::MappingWord(s, random_word(rng, pool, max_len)));
}

inline palf::Palf random_palf(std::mt19937& rng, const palf::Surface& s, std::size_t n,
                              std::size_t conj_len = 2) {
  palf::Palf p("P", s);
  for (std::size_t i = 0; i < n; ++i) p.cycles.push_back(random_curve(rng, s, conj_len));
  return p;
}

inline bool cycles_equal(const palf::Palf& a, const palf::Palf& b) {
  if (a.cycles.size() != b.cycles.size()) return false;
  for (std::size_t i = 0; i < a.cycles.size(); ++i)
    if (!palf::curves_equal(a.cycles[i], b.cycles[i])) return false;
  return true;
}

}  // namespace testing_support
