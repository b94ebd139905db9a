#pragma once

// Hurwitz moves on positive factorizations and a depth-bounded search for
// move sequences relating two factorizations.
//
// With cycles in application order, a right move at i rewrites the pair
//   (..., a, b, ...) -> (..., b, t_b(a), ...)
// and a left move is its inverse
//   (..., a, b, ...) -> (..., t_a^{-1}(b), a, ...).
// Both keep t_b t_a, hence the total monodromy, unchanged.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "palf/fibration.hpp"

namespace palf {

struct HurwitzMove {
  enum class Direction { Right, Left };

  std::size_t index = 0;
  Direction direction = Direction::Right;

  HurwitzMove inverse() const {
    return {index, direction == Direction::Right ? Direction::Left : Direction::Right};
  }
  // "R2", "L0"
  std::string to_string() const;

  friend bool operator==(const HurwitzMove&, const HurwitzMove&) = default;
};

// Throws palf::Error if index + 1 >= cycle count.
Palf apply_move(const Palf& p, const HurwitzMove& m);

struct SearchOptions {
  int depth = 0;
  // Also accept f(q) for words f of length 1..conjugator_length over the
  // signed convex twists.
  bool conjugation = false;
  int conjugator_length = 2;
};

struct SearchResult {
  bool found = false;
  // Applied to p in order. Minimal length, lexicographically least among
  // those (index ascending, Right before Left).
  std::vector<HurwitzMove> moves;
  // When found through conjugation: the word f with result = f(q) elementwise.
  std::vector<Generator> conjugator;
  std::size_t states_explored = 0;
};

// Breadth-first search from p. A miss is not a proof of inequivalence.
// Throws SurfaceMismatch when the fibers differ.
SearchResult equivalent_within(const Palf& p, const Palf& q, const SearchOptions& options);

}  // namespace palf
