#include "palf/curve.hpp"

#include <algorithm>
#include <sstream>

#include "palf/error.hpp"

namespace palf {

namespace {

Word least_class(const Word& loop) {
  Word a = cyclic_normal_form(loop);
  Word b = cyclic_normal_form(loop.inverse());
  return b < a ? b : a;
}

// t_{f(c)} = f t_c f^-1
MappingClass conjugate(const MappingClass& f, const MappingClass& t) { return compose(f, compose(t, f.inverse())); }

}  // namespace

MappingWord::MappingWord(const Surface& s)
    : surface_(s), value_(std::make_shared<const LazyClass>(MappingClass::identity(s))) {}

MappingWord::MappingWord(const Surface& s, std::vector<Generator> letters)
    : surface_(s), letters_(std::move(letters)) {
  for (const Generator& g : letters_) g.check(s);
  value_ = std::make_shared<const LazyClass>([s, word = letters_] { return evaluate(s, word); });
}

MappingWord MappingWord::then(const MappingWord& next) const {
  if (!(next.surface_ == surface_)) throw SurfaceMismatch();
  std::vector<Generator> joined = letters_;
  joined.insert(joined.end(), next.letters_.begin(), next.letters_.end());
  auto value = std::make_shared<const LazyClass>(
      [first = value_, second = next.value_] { return compose(second->get(), first->get()); });
  return MappingWord(surface_, std::move(joined), std::move(value));
}

MappingWord MappingWord::inverse() const {
  std::vector<Generator> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  auto value = std::make_shared<const LazyClass>([v = value_] { return v->get().inverse(); });
  return MappingWord(surface_, std::move(inv), std::move(value));
}

Curve::Curve(const Surface& s, int lo, int hi, MappingWord conjugator)
    : lo_(lo), hi_(hi), conjugator_(std::move(conjugator)) {
  if (!(conjugator_.surface() == s)) throw SurfaceMismatch();
  Generator::twist(lo, hi).check(s);
  pi1_class_ = least_class(conjugator_.value().loop_action(convex_loop(lo, hi)));
  twist_ = std::make_shared<const LazyClass>([s, lo, hi, conj = conjugator_] {
    return conjugate(conj.value(), twist(s, Generator::twist(lo, hi)));
  });
}

std::vector<int> Curve::enclosed_holes() const {
  std::vector<bool> inside(static_cast<std::size_t>(surface().holes()) + 1, false);
  for (int i = lo_; i <= hi_; ++i) inside[static_cast<std::size_t>(i)] = true;
  for (const Generator& g : conjugator_.letters())
    if (g.kind == Generator::Kind::HalfTwist) {
      const bool a = inside[static_cast<std::size_t>(g.lo)];
      inside[static_cast<std::size_t>(g.lo)] = inside[static_cast<std::size_t>(g.lo) + 1];
      inside[static_cast<std::size_t>(g.lo) + 1] = a;
    }
  std::vector<int> out;
  for (int i = 1; i <= surface().holes(); ++i)
    if (inside[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

bool curves_equal(const Curve& a, const Curve& b) {
  if (!(a.surface() == b.surface())) throw SurfaceMismatch();
  return a.pi1_class() == b.pi1_class();
}

std::vector<long> homology_class(const Curve& c) {
  auto v = c.pi1_class().abelianize(c.surface().holes());
  auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
  if (first != v.end() && *first < 0)
    for (long& x : v) x = -x;
  return v;
}

bool disjoint_by_construction(const Curve& a, const Curve& b) {
  if (!(a.surface() == b.surface())) throw SurfaceMismatch();
  if (a.conjugator().letters() != b.conjugator().letters()) return false;
  const bool apart = a.hi() < b.lo() || b.hi() < a.lo();
  const bool nested = (a.lo() <= b.lo() && b.hi() <= a.hi()) || (b.lo() <= a.lo() && a.hi() <= b.hi());
  return apart || nested;
}

Curve act_on_curve(const MappingWord& f, const Curve& c) {
  if (!(f.surface() == c.surface())) throw SurfaceMismatch();
  Word cls = least_class(f.value().loop_action(c.pi1_class()));
  auto twist = std::make_shared<const LazyClass>(
      [fv = f.value_, tc = c.twist_] { return conjugate(fv->get(), tc->get()); });
  return Curve(c.lo(), c.hi(), c.conjugator().then(f), std::move(cls), std::move(twist));
}

MappingWord twist_word(const Curve& c, int sign) {
  const Surface& s = c.surface();
  const MappingWord base(s, {Generator::twist(c.lo(), c.hi(), sign)});
  std::vector<Generator> letters = c.conjugator().inverse().then(base).then(c.conjugator()).letters();
  std::shared_ptr<const LazyClass> value = c.twist_;
  if (sign < 0) value = std::make_shared<const LazyClass>([t = c.twist_] { return t->get().inverse(); });
  return MappingWord(s, std::move(letters), std::move(value));
}

MappingClass twist_along(const Curve& c, int sign) { return twist_word(c, sign).value(); }

std::string describe(const Curve& c) {
  std::ostringstream os;
  os << "c(" << c.lo() << ',' << c.hi() << ')';
  if (!c.is_convex()) {
    os << '[';
    bool first = true;
    for (const Generator& g : c.conjugator().letters()) {
      if (!first) os << ' ';
      first = false;
      os << g.to_string();
    }
    os << ']';
  }
  return os.str();
}

}  // namespace palf
