#pragma once

// Planar surfaces and their mapping class groups Map(F, dF).
//
// Sigma_{0,b} is drawn as a disk (boundary 0) with holes 1..b-1 in a row.
// The basepoint sits on the outer boundary; x_i is the loop running up the
// standard arc delta_i, around hole i, and back, so pi_1 = F(x_1..x_{b-1}).
//
// A mapping class is stored by where it sends the standard arcs:
// f(delta_i) = w_i . delta_{pi(i)}, with w_i in pi_1. The arcs cut F into a
// disk, so this data is a complete invariant (including boundary-parallel
// twists, which the loop action alone cannot see).
//
// Besides Dehn twists the engine knows the half twist s_i exchanging holes
// i and i+1 by a translation of the hole boundaries. Half twists permute
// holes, so they are only used as conjugators to reach curves that enclose a
// non-consecutive set of holes; every mapping class built from Dehn twists
// alone is pure (pi = id).

#include <compare>
#include <string>
#include <vector>

#include "palf/int_matrix.hpp"
#include "palf/word.hpp"

namespace palf {

class Surface {
 public:
  // Throws palf::Error for genus != 0 or boundaries < 2.
  Surface(int genus, int boundaries);
  static Surface planar(int boundaries) { return Surface(0, boundaries); }

  int genus() const { return genus_; }
  int boundaries() const { return boundaries_; }
  int holes() const { return boundaries_ - 1; }
  int euler_characteristic() const { return 2 - 2 * genus_ - boundaries_; }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  int genus_;
  int boundaries_;
};

// One letter of a mapping-class word.
//   Twist:     the convex round curve c_{lo,hi} around holes lo..hi.
//   HalfTwist: s_lo, exchanging holes lo and lo+1 (hi == lo + 1).
struct Generator {
  enum class Kind { Twist, HalfTwist };

  Kind kind = Kind::Twist;
  int lo = 1;
  int hi = 1;
  int sign = +1;

  static Generator twist(int lo, int hi, int sign = +1) { return {Kind::Twist, lo, hi, sign}; }
  static Generator half_twist(int i, int sign = +1) { return {Kind::HalfTwist, i, i + 1, sign}; }

  Generator inverse() const { return {kind, lo, hi, -sign}; }
  // Throws palf::Error when the generator does not fit on s.
  void check(const Surface& s) const;
  // "+c(1,2)", "-c(3,3)", "+s(2)"
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using TwistGen = Generator;

class MappingClass {
 public:
  static MappingClass identity(const Surface& s);

  const Surface& surface() const { return surface_; }
  // w_1..w_{b-1} (0-based storage).
  const std::vector<Word>& arc_coords() const { return fwd_.arcs; }
  // 0-based: arc i ends on hole perm()[i].
  const std::vector<int>& permutation() const { return fwd_.perm; }
  bool is_pure() const;

  // Image of a loop under the induced automorphism x_i -> w_i x_{pi(i)} w_i^-1.
  Word loop_action(const Word& w) const;
  MappingClass inverse() const;
  IntMatrix abelianized_action() const;
  // The induced map sends x_1...x_{b-1} to a conjugate of itself.
  bool peripheral_consistent() const;

  // g o f: f first.
  friend MappingClass compose(const MappingClass& g, const MappingClass& f);
  friend bool equals(const MappingClass& f, const MappingClass& g);

 private:
  struct ArcData {
    std::vector<int> perm;
    std::vector<Word> arcs;
  };

  MappingClass(const Surface& s, ArcData fwd, ArcData inv)
      : surface_(s), fwd_(std::move(fwd)), inv_(std::move(inv)) {}

  static ArcData compose_data(const ArcData& g, const ArcData& f);
  static Word act(const ArcData& d, const Word& w);

  friend MappingClass twist(const Surface& s, const Generator& g);

  Surface surface_;
  // Arc data of the inverse class, maintained by every constructor.
  ArcData fwd_;
  ArcData inv_;
};

MappingClass compose(const MappingClass& g, const MappingClass& f);
bool equals(const MappingClass& f, const MappingClass& g);

// Dehn twist (Kind::Twist) or half twist (Kind::HalfTwist). For a positive
// twist on c_{lo,hi} the arcs delta_lo..delta_hi pick up C = x_lo ... x_hi.
MappingClass twist(const Surface& s, const Generator& g);

// Product of a word given in application order (front applied first).
MappingClass evaluate(const Surface& s, const std::vector<Generator>& word);

// x_lo x_{lo+1} ... x_hi
Word convex_loop(int lo, int hi);

}  // namespace palf
