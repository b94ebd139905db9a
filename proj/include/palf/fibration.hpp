#pragma once

// Genus-zero PALFs: a planar fiber together with an ordered list of
// vanishing cycles. cycles[0] is applied first, so the monodromy is
// t_{cycles[n-1]} o ... o t_{cycles[0]}, written t_{a_n} ... t_{a_1}.
//
// Homological model. X is F x D^2 with one 2-handle per vanishing cycle,
// so with V the (b-1) x n matrix of cycle classes in H_1(F):
//   chi(X)  = chi(F) + n
//   H_1(X)  = coker V
//   H_2(X)  = ker V             (free, rank n - rank V)
//   H_1(dX) = coker(V V^T)      (planar fiber: the intersection form of F vanishes)

#include <optional>
#include <string>
#include <vector>

#include "palf/curve.hpp"
#include "palf/int_matrix.hpp"

namespace palf {

struct Palf {
  std::string name;
  Surface fiber;
  std::vector<Curve> cycles;

  Palf(std::string name, const Surface& fiber, std::vector<Curve> cycles = {})
      : name(std::move(name)), fiber(fiber), cycles(std::move(cycles)) {}
};

struct Violation {
  std::optional<std::size_t> cycle;
  std::string message;
};

// Empty result means valid.
std::vector<Violation> validate(const Palf& p);

long euler_characteristic(const Palf& p);
// Columns are homology_class of each cycle.
IntMatrix cycle_matrix(const Palf& p);
AbelianGroup total_space_h1(const Palf& p);
AbelianGroup total_space_h2(const Palf& p);
AbelianGroup boundary_h1(const Palf& p);
MappingClass total_monodromy(const Palf& p);

struct InvariantReport {
  long euler = 0;
  AbelianGroup h1_total;
  AbelianGroup h2_total;
  AbelianGroup h1_boundary;
  std::size_t cycle_count = 0;
  int fiber_boundaries = 0;

  // (name, value) in a fixed order.
  std::vector<std::pair<std::string, std::string>> records() const;
  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport report(const Palf& p);

enum class FactorizationRelation {
  ElementwiseEqual,  // same length, curves_equal at every position
  SameMonodromy,     // total monodromies agree, factorizations differ
  Different,
};

std::string to_string(FactorizationRelation r);

struct Comparison {
  struct Row {
    std::string name;
    std::string a;
    std::string b;
    bool equal = false;
  };
  std::vector<Row> rows;
  FactorizationRelation relation = FactorizationRelation::Different;

  bool invariants_equal() const;
};

Comparison compare(const Palf& p, const Palf& q);

}  // namespace palf
