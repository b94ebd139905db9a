#pragma once

// Classical relations checked through the mapping-class engine.

#include <string>
#include <vector>

#include "palf/curve.hpp"

namespace palf {

enum class RelationKind { Lantern, Commuting, Conjugation };

struct RelationCheck {
  bool holds = false;
  // Lantern: exponent e of the half twist s_2^e with c = s_2^e(c_{1,2}).
  int half_twist_exponent = 0;
  std::string detail;
};

// On Sigma_{0,4}: t_{c(1,1)} t_{c(2,2)} t_{c(3,3)} t_{c(1,3)} = t_a t_b t_c with
// a = c(1,2), b = c(2,3) and c the curve around holes {1,3}, realized as
// s_2^e(c(1,2)). Tries e = +1 then e = -1.
// Throws palf::Error unless s has 4 boundary components.
RelationCheck verify_lantern(const Surface& s);

// t_a t_b = t_b t_a for convex curves with nested or disjoint hole runs.
// Throws palf::Error when the runs overlap without nesting.
RelationCheck verify_commuting(const Surface& s, const Generator& a, const Generator& b);

// f t_c f^-1 = t_{f(c)}.
RelationCheck verify_conjugation(const MappingWord& f, const Curve& c);

}  // namespace palf
