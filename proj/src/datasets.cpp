#include "palf/datasets.hpp"

#include "palf/error.hpp"

namespace palf {

Dataset dataset_from_string(const std::string& name) {
  if (name == "w1") return Dataset::W1;
  if (name == "c1") return Dataset::C1;
  if (name == "c2") return Dataset::C2;
  throw Error("unknown dataset '" + name + "' (expected w1, c1 or c2)");
}

std::string to_string(Dataset d) {
  switch (d) {
    case Dataset::W1:
      return "w1";
    case Dataset::C1:
      return "c1";
    case Dataset::C2:
      return "c2";
  }
  return "w1";
}

std::string dataset_palf_name(Dataset which) {
  switch (which) {
    case Dataset::W1:
      return "W1";
    case Dataset::C1:
      return "C1";
    case Dataset::C2:
      return "C2";
  }
  return "W1";
}

namespace {

using G = Generator;

const char* const kProvenance[] = {
    "Provenance: reconstructed dataset. The vanishing cycles of this fibration",
    "exist only as drawings. These curves match the fiber, cycle count and shared",
    "delta prefix, and were chosen so the computed invariants meet the required",
    "values; they are not a transcription of the original drawings.",
};

// The cork part on holes 1..4: four cycles whose classes
// e1+e2, e2+e3, e3+e4, e1+e3+e4 form a unimodular matrix.
void add_cork_cycles(PalfDocument& doc, const std::string& prefix) {
  doc.add_convex(prefix + "1", 1, 2);
  doc.add_convex(prefix + "2", 2, 3);
  doc.add_convex(prefix + "3.base", 3, 4);
  doc.add_derived(prefix + "3", prefix + "3.base", {G::twist(2, 3)});
  doc.add_convex(prefix + "4.base", 2, 4);
  doc.add_derived(prefix + "4", prefix + "4.base", {G::half_twist(1, -1)});
}

}  // namespace

PalfDocument gen_dataset(Dataset which, std::optional<int> m) {
  if (which == Dataset::W1) {
    PalfDocument doc(Surface::planar(5));
    doc.header.push_back("Akbulut cork W1 (Mazur manifold): genus zero PALF, fiber Sigma_{0,5}.");
    for (const char* line : kProvenance) doc.header.emplace_back(line);
    add_cork_cycles(doc, "a");
    doc.add_palf("W1", {"a1", "a2", "a3", "a4"});
    return doc;
  }

  if (!m) throw Error("datasets c1 and c2 need a parameter m <= -5");
  if (*m > -5) throw Error("parameter m must be <= -5, got " + std::to_string(*m));
  const int boundaries = -*m + 5;
  const int holes = boundaries - 1;
  const bool first = which == Dataset::C1;

  PalfDocument doc(Surface::planar(boundaries));
  doc.header.push_back(std::string(first ? "C1" : "C2") + "(" + std::to_string(*m) +
                       ",1,3,0): genus zero PALF, fiber Sigma_{0," + std::to_string(boundaries) +
                       "}.");
  doc.header.push_back(
      "Parameters follow the (m,1,3,0) convention; C2(m,3,1,0) names the same fibration.");
  for (const char* line : kProvenance) doc.header.emplace_back(line);

  // beta_1..beta_6 on holes 1..5.
  add_cork_cycles(doc, "b");
  doc.add_convex("b5", 4, 5);
  doc.add_convex("b6", 5, 5);
  std::vector<std::string> cycles{"b1", "b2", "b3", "b4", "b5", "b6"};

  // gamma_i = F(beta_i): the cork part differs by a fixed mapping class
  // supported on holes 1..5, which leaves every homology class unchanged.
  if (!first) {
    const std::vector<Generator> cork_twist{G::twist(1, 3), G::twist(2, 4, -1), G::twist(3, 5)};
    for (int i = 1; i <= 6; ++i)
      doc.add_derived("g" + std::to_string(i), "b" + std::to_string(i), cork_twist);
    for (int i = 0; i < 6; ++i) cycles[static_cast<std::size_t>(i)] = "g" + std::to_string(i + 1);
  }

  // delta_j = c(j-2, j-1) for j = 7..-m+5: a chain through holes 5..holes.
  for (int j = 7; j <= holes + 1; ++j) {
    const std::string name = "d" + std::to_string(j);
    doc.add_convex(name, j - 2, j - 1);
    cycles.push_back(name);
  }
  doc.add_palf(dataset_palf_name(which), std::move(cycles));
  return doc;
}

}  // namespace palf
