#include "palf/fibration.hpp"

#include <algorithm>

#include "palf/error.hpp"

namespace palf {

std::vector<Violation> validate(const Palf& p) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    const Curve& c = p.cycles[i];
    if (!(c.surface() == p.fiber)) {
      out.push_back({i, "cycle lives on a surface with " + std::to_string(c.surface().boundaries()) +
                            " boundary components, fiber has " +
                            std::to_string(p.fiber.boundaries())});
      continue;
    }
    const auto h = homology_class(c);
    if (std::all_of(h.begin(), h.end(), [](long x) { return x == 0; }))
      out.push_back({i, "cycle " + describe(c) + " is homologically trivial"});
  }
  return out;
}

long euler_characteristic(const Palf& p) {
  return p.fiber.euler_characteristic() + static_cast<long>(p.cycles.size());
}

IntMatrix cycle_matrix(const Palf& p) {
  std::vector<std::vector<long>> cols;
  cols.reserve(p.cycles.size());
  for (const Curve& c : p.cycles) {
    if (!(c.surface() == p.fiber)) throw SurfaceMismatch();
    cols.push_back(homology_class(c));
  }
  return IntMatrix::from_columns(static_cast<std::size_t>(p.fiber.holes()), cols);
}

AbelianGroup total_space_h1(const Palf& p) { return cokernel(cycle_matrix(p)); }

AbelianGroup total_space_h2(const Palf& p) {
  const SmithForm snf = smith_normal_form(cycle_matrix(p));
  AbelianGroup g;
  g.free_rank = p.cycles.size() - snf.rank;
  return g;
}

AbelianGroup boundary_h1(const Palf& p) {
  const IntMatrix v = cycle_matrix(p);
  return cokernel(v * v.transpose());
}

MappingClass total_monodromy(const Palf& p) {
  MappingClass m = MappingClass::identity(p.fiber);
  for (const Curve& c : p.cycles) m = compose(twist_along(c), m);
  return m;
}

std::vector<std::pair<std::string, std::string>> InvariantReport::records() const {
  return {
      {"fiber_boundaries", std::to_string(fiber_boundaries)},
      {"cycle_count", std::to_string(cycle_count)},
      {"euler", std::to_string(euler)},
      {"h1_total", h1_total.to_string()},
      {"h2_total", h2_total.to_string()},
      {"h1_boundary", h1_boundary.to_string()},
  };
}

InvariantReport report(const Palf& p) {
  InvariantReport r;
  r.euler = euler_characteristic(p);
  r.h1_total = total_space_h1(p);
  r.h2_total = total_space_h2(p);
  r.h1_boundary = boundary_h1(p);
  r.cycle_count = p.cycles.size();
  r.fiber_boundaries = p.fiber.boundaries();
  if (r.euler != (2 - r.fiber_boundaries) + static_cast<long>(r.cycle_count))
    throw Error("euler characteristic identity violated for " + p.name);
  // chi = 1 - b_1 + b_2 (no 3- or 4-handles).
  if (r.euler != 1 - static_cast<long>(r.h1_total.free_rank) + static_cast<long>(r.h2_total.free_rank))
    throw Error("betti numbers disagree with the handle count for " + p.name);
  return r;
}

std::string to_string(FactorizationRelation r) {
  switch (r) {
    case FactorizationRelation::ElementwiseEqual:
      return "elementwise-equal";
    case FactorizationRelation::SameMonodromy:
      return "equal-up-to-total-monodromy";
    case FactorizationRelation::Different:
      return "neither";
  }
  return "neither";
}

bool Comparison::invariants_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.equal; });
}

Comparison compare(const Palf& p, const Palf& q) {
  Comparison out;
  const auto ra = report(p).records();
  const auto rb = report(q).records();
  for (std::size_t i = 0; i < ra.size(); ++i)
    out.rows.push_back({ra[i].first, ra[i].second, rb[i].second, ra[i].second == rb[i].second});

  if (!(p.fiber == q.fiber)) return out;
  if (p.cycles.size() == q.cycles.size() &&
      std::equal(p.cycles.begin(), p.cycles.end(), q.cycles.begin(), curves_equal)) {
    out.relation = FactorizationRelation::ElementwiseEqual;
  } else if (equals(total_monodromy(p), total_monodromy(q))) {
    out.relation = FactorizationRelation::SameMonodromy;
  }
  return out;
}

}  // namespace palf
