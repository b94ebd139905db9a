#include "palf/relations.hpp"

#include "palf/error.hpp"

namespace palf {

RelationCheck verify_lantern(const Surface& s) {
  if (s.boundaries() != 4)
    throw Error("the lantern relation is checked on the four-holed sphere (4 boundaries), got " +
                std::to_string(s.boundaries()));
  const MappingClass lhs = evaluate(s, {Generator::twist(1, 1), Generator::twist(2, 2),
                                        Generator::twist(3, 3), Generator::twist(1, 3)});
  const Curve a = Curve::convex(s, 1, 2);
  const Curve b = Curve::convex(s, 2, 3);
  RelationCheck out;
  for (int e : {+1, -1}) {
    const Curve c = act_on_curve(MappingWord(s, {Generator::half_twist(2, e)}), a);
    const MappingClass rhs = compose(twist_along(a), compose(twist_along(b), twist_along(c)));
    if (equals(lhs, rhs)) {
      out.holds = true;
      out.half_twist_exponent = e;
      out.detail = "t_a t_b t_c with c = s_2^" + std::to_string(e) + "(c(1,2)), pi1 class " +
                   c.pi1_class().to_string();
      return out;
    }
  }
  out.detail = "no choice of the {1,3} curve satisfies the relation";
  return out;
}

RelationCheck verify_commuting(const Surface& s, const Generator& a, const Generator& b) {
  if (a.kind != Generator::Kind::Twist || b.kind != Generator::Kind::Twist)
    throw Error("commuting check takes two convex twist curves");
  a.check(s);
  b.check(s);
  const bool disjoint = a.hi < b.lo || b.hi < a.lo;
  const bool nested = (a.lo <= b.lo && b.hi <= a.hi) || (b.lo <= a.lo && a.hi <= b.hi);
  if (!disjoint && !nested)
    throw Error("curves " + a.to_string() + " and " + b.to_string() + " intersect");
  const MappingClass ta = twist(s, a);
  const MappingClass tb = twist(s, b);
  RelationCheck out;
  out.holds = equals(compose(ta, tb), compose(tb, ta));
  out.detail = a.to_string() + " and " + b.to_string();
  return out;
}

RelationCheck verify_conjugation(const MappingWord& f, const Curve& c) {
  const MappingClass& fv = f.value();
  const MappingClass lhs = compose(fv, compose(twist_along(c), fv.inverse()));
  const Curve image = act_on_curve(f, c);
  RelationCheck out;
  out.holds = equals(lhs, twist_along(image));
  out.detail = "f(c) = " + describe(image);
  return out;
}

}  // namespace palf
