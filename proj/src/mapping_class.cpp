#include "palf/mapping_class.hpp"

#include <numeric>
#include <sstream>

#include "palf/error.hpp"

namespace palf {

Surface::Surface(int genus, int boundaries) : genus_(genus), boundaries_(boundaries) {
  if (genus != 0)
    throw Error("unsupported genus " + std::to_string(genus) + ": only planar fibers are handled");
  if (boundaries < 2)
    throw Error("a planar fiber needs at least 2 boundary components, got " +
                std::to_string(boundaries));
}

void Generator::check(const Surface& s) const {
  if (sign != 1 && sign != -1) throw Error("generator sign must be +1 or -1");
  const int n = s.holes();
  if (kind == Kind::Twist) {
    if (lo < 1 || lo > hi || hi > n)
      throw Error("twist curve c(" + std::to_string(lo) + "," + std::to_string(hi) +
                  ") is not a hole range of a surface with " + std::to_string(n) + " holes");
  } else {
    if (lo < 1 || hi != lo + 1 || hi > n)
      throw Error("half twist s(" + std::to_string(lo) + ") needs holes " + std::to_string(lo) +
                  " and " + std::to_string(lo + 1) + " on a surface with " + std::to_string(n) +
                  " holes");
  }
}

std::string Generator::to_string() const {
  std::ostringstream os;
  os << (sign > 0 ? '+' : '-');
  if (kind == Kind::Twist)
    os << "c(" << lo << ',' << hi << ')';
  else
    os << "s(" << lo << ')';
  return os.str();
}

Word convex_loop(int lo, int hi) {
  WordBuilder b;
  for (int i = lo; i <= hi; ++i) b.push(i);
  return std::move(b).build();
}

MappingClass MappingClass::identity(const Surface& s) {
  ArcData d;
  d.perm.resize(static_cast<std::size_t>(s.holes()));
  std::iota(d.perm.begin(), d.perm.end(), 0);
  d.arcs.resize(d.perm.size());
  return MappingClass(s, d, d);
}

bool MappingClass::is_pure() const {
  for (std::size_t i = 0; i < fwd_.perm.size(); ++i)
    if (fwd_.perm[i] != static_cast<int>(i)) return false;
  return true;
}

Word MappingClass::act(const ArcData& d, const Word& w) {
  WordBuilder b;
  for (Letter l : w.letters()) {
    const int i = std::abs(l);
    if (i > static_cast<int>(d.arcs.size()))
      throw Error("word uses generator x" + std::to_string(i) + " beyond the surface rank");
    const Word& conj = d.arcs[static_cast<std::size_t>(i - 1)];
    const int target = d.perm[static_cast<std::size_t>(i - 1)] + 1;
    b.append(conj);
    b.push(l > 0 ? target : -target);
    b.append_inverse(conj);
  }
  return std::move(b).build();
}

Word MappingClass::loop_action(const Word& w) const { return act(fwd_, w); }

MappingClass MappingClass::inverse() const { return MappingClass(surface_, inv_, fwd_); }

MappingClass::ArcData MappingClass::compose_data(const ArcData& g, const ArcData& f) {
  ArcData out;
  const std::size_t n = f.arcs.size();
  out.perm.resize(n);
  out.arcs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto fi = static_cast<std::size_t>(f.perm[i]);
    out.perm[i] = g.perm[fi];
    WordBuilder b;
    b.append(act(g, f.arcs[i]));
    b.append(g.arcs[fi]);
    out.arcs.push_back(std::move(b).build());
  }
  return out;
}

MappingClass compose(const MappingClass& g, const MappingClass& f) {
  if (!(g.surface_ == f.surface_)) throw SurfaceMismatch();
  return MappingClass(f.surface_, MappingClass::compose_data(g.fwd_, f.fwd_),
                      MappingClass::compose_data(f.inv_, g.inv_));
}

bool equals(const MappingClass& f, const MappingClass& g) {
  if (!(f.surface_ == g.surface_)) throw SurfaceMismatch();
  return f.fwd_.perm == g.fwd_.perm && f.fwd_.arcs == g.fwd_.arcs;
}

IntMatrix MappingClass::abelianized_action() const {
  const int n = surface_.holes();
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const auto col = loop_action(Word::generator(j)).abelianize(n);
    for (int i = 0; i < n; ++i)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

bool MappingClass::peripheral_consistent() const {
  const Word p = convex_loop(1, surface_.holes());
  return cyclic_normal_form(loop_action(p)) == cyclic_normal_form(p);
}

MappingClass twist(const Surface& s, const Generator& g) {
  g.check(s);
  MappingClass id = MappingClass::identity(s);
  MappingClass::ArcData pos = id.fwd_;
  MappingClass::ArcData neg = id.fwd_;
  const auto lo = static_cast<std::size_t>(g.lo - 1);
  if (g.kind == Generator::Kind::Twist) {
    const Word c = convex_loop(g.lo, g.hi);
    const Word ci = c.inverse();
    for (int k = g.lo; k <= g.hi; ++k) {
      pos.arcs[static_cast<std::size_t>(k - 1)] = c;
      neg.arcs[static_cast<std::size_t>(k - 1)] = ci;
    }
  } else {
    // s: delta_i -> x_i delta_{i+1}, delta_{i+1} -> delta_i.
    std::swap(pos.perm[lo], pos.perm[lo + 1]);
    std::swap(neg.perm[lo], neg.perm[lo + 1]);
    pos.arcs[lo] = Word::generator(g.lo);
    neg.arcs[lo + 1] = Word::generator(g.lo + 1).inverse();
  }
  if (g.sign > 0) return MappingClass(s, std::move(pos), std::move(neg));
  return MappingClass(s, std::move(neg), std::move(pos));
}

MappingClass evaluate(const Surface& s, const std::vector<Generator>& word) {
  MappingClass m = MappingClass::identity(s);
  for (const Generator& g : word) m = compose(twist(s, g), m);
  return m;
}

}  // namespace palf
