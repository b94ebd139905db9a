#pragma once

// Isotopy classes of essential simple closed curves on a planar fiber.
//
// A curve is stored as the image of a convex round curve c_{lo,hi} under a
// mapping-class word (its conjugator). Curves are only ever built this way,
// so they are simple by construction. Equality is semantic: two simple closed
// curves are isotopic iff they are freely homotopic up to orientation, i.e.
// iff their pi_1 conjugacy classes agree up to inversion.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "palf/mapping_class.hpp"

namespace palf {

// A mapping class computed on first use. Not thread-safe.
class LazyClass {
 public:
  explicit LazyClass(MappingClass value) : value_(std::move(value)) {}
  explicit LazyClass(std::function<MappingClass()> make) : make_(std::move(make)) {}

  const MappingClass& get() const {
    if (!value_) {
      value_ = make_();
      make_ = nullptr;
    }
    return *value_;
  }

 private:
  mutable std::optional<MappingClass> value_;
  mutable std::function<MappingClass()> make_;
};

class Curve;

// A mapping-class word (application order: front first) together with its
// evaluated class. The class is evaluated lazily; letters are checked
// against the surface on construction.
class MappingWord {
 public:
  explicit MappingWord(const Surface& s);
  MappingWord(const Surface& s, std::vector<Generator> letters);

  const std::vector<Generator>& letters() const { return letters_; }
  const MappingClass& value() const { return value_->get(); }
  const Surface& surface() const { return surface_; }

  // This word followed by `next`; evaluates to next o this.
  MappingWord then(const MappingWord& next) const;
  MappingWord inverse() const;

 private:
  MappingWord(const Surface& s, std::vector<Generator> letters, std::shared_ptr<const LazyClass> value)
      : surface_(s), letters_(std::move(letters)), value_(std::move(value)) {}

  friend MappingWord twist_word(const Curve& c, int sign);
  friend Curve act_on_curve(const MappingWord& f, const Curve& c);

  Surface surface_;
  std::vector<Generator> letters_;
  std::shared_ptr<const LazyClass> value_;
};

class Curve {
 public:
  // Throws palf::Error unless 1 <= lo <= hi <= holes.
  Curve(const Surface& s, int lo, int hi, MappingWord conjugator);
  static Curve convex(const Surface& s, int lo, int hi) { return Curve(s, lo, hi, MappingWord(s)); }

  const Surface& surface() const { return conjugator_.surface(); }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const MappingWord& conjugator() const { return conjugator_; }
  bool is_convex() const { return conjugator_.letters().empty(); }

  // Canonical conjugacy representative, the smaller of the forms of the
  // curve's loop and its inverse.
  const Word& pi1_class() const { return pi1_class_; }
  // Holes on the side of the curve away from the outer boundary, ascending.
  std::vector<int> enclosed_holes() const;

 private:
  Curve(int lo, int hi, MappingWord conjugator, Word pi1_class, std::shared_ptr<const LazyClass> twist)
      : lo_(lo), hi_(hi), conjugator_(std::move(conjugator)), pi1_class_(std::move(pi1_class)),
        twist_(std::move(twist)) {}

  friend Curve act_on_curve(const MappingWord& f, const Curve& c);
  friend MappingWord twist_word(const Curve& c, int sign);

  int lo_;
  int hi_;
  MappingWord conjugator_;
  Word pi1_class_;
  // The positive twist along the curve.
  std::shared_ptr<const LazyClass> twist_;
};

inline const Word& pi1_class(const Curve& c) { return c.pi1_class(); }

// Throws SurfaceMismatch.
bool curves_equal(const Curve& a, const Curve& b);

// Class in H_1(F) = Z^{b-1}, sign-normalized so the first nonzero entry is positive.
std::vector<long> homology_class(const Curve& c);

// True when a and b are images of disjoint or nested convex curves under
// the same conjugator word, so that the twists along them commute and each
// fixes the other curve. False means "unknown", not "intersecting".
bool disjoint_by_construction(const Curve& a, const Curve& b);

// f(c): same base, conjugator extended by f.
Curve act_on_curve(const MappingWord& f, const Curve& c);

// The Dehn twist along c as a word: conjugator^-1, base twist, conjugator.
MappingWord twist_word(const Curve& c, int sign = +1);
MappingClass twist_along(const Curve& c, int sign = +1);

// "c(1,3)" or "c(1,2)[+c(2,3) -s(1)]"
std::string describe(const Curve& c);

}  // namespace palf
