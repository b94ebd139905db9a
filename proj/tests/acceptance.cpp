// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "palf/datasets.hpp"
#include "palf/document.hpp"
#include "palf/hurwitz.hpp"
#include "palf/relations.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using palf::Curve;
using palf::Dataset;
using palf::Generator;
using palf::MappingClass;
using palf::Palf;
using palf::Surface;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Run {
  int status = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("palf-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Run cli(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string("\"") + PALF_CLI + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                          (scratch() / "stderr.txt").string() + "\"";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome lantern() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Run r = cli("relations --check lantern --boundaries 4");
  const double t = seconds_since(t0);
  o.require(r.status == 0, "exit status " + std::to_string(r.status));
  o.require(r.out.rfind("true\n", 0) == 0, "output was: " + r.out);
  const auto in_process = palf::verify_lantern(Surface::planar(4));
  o.require(in_process.holds, "engine reports false");
  o.require(t < 1.0, "took " + fmt(t));
  if (o.ok) o.detail = "true, " + fmt(t);
  return o;
}

Outcome engine_properties() {
  Outcome o;
  std::mt19937 rng(2024);
  std::size_t cases = 0;
  for (const Surface& s : {Surface::planar(4), Surface::planar(5)}) {
    const auto id = MappingClass::identity(s);
    const auto twists = testing_support::all_twists(s);
    for (int trial = 0; trial < 500; ++trial) {
      const auto fw = testing_support::random_twist_word(rng, s, 6);
      const auto f = palf::evaluate(s, fw);
      const auto g = palf::evaluate(s, testing_support::random_twist_word(rng, s, 6));
      const auto h = palf::evaluate(s, testing_support::random_twist_word(rng, s, 6));
      o.require(palf::equals(palf::compose(id, f), f) && palf::equals(palf::compose(f, id), f), "identity law");
      o.require(palf::equals(palf::compose(f, f.inverse()), id) && palf::equals(palf::compose(f.inverse(), f), id),
                "inverse law");
      o.require(palf::equals(palf::compose(palf::compose(f, g), h), palf::compose(f, palf::compose(g, h))),
                "associativity");

      const Curve c = testing_support::random_curve(rng, s, 2);
      const palf::MappingWord fm(s, fw);
      const auto lhs = palf::twist_along(palf::act_on_curve(fm, c));
      const auto rhs = palf::compose(f, palf::compose(palf::twist_along(c), f.inverse()));
      o.require(palf::equals(lhs, rhs), "t_{f(c)} = f t_c f^-1");

      // A pair of disjoint or nested convex curves, each moved by the same f.
      std::uniform_int_distribution<std::size_t> pick(0, twists.size() - 1);
      Generator a = twists[pick(rng)], b = twists[pick(rng)];
      const bool apart = a.hi < b.lo || b.hi < a.lo;
      const bool nested = (a.lo <= b.lo && b.hi <= a.hi) || (b.lo <= a.lo && a.hi <= b.hi);
      if (apart || nested) {
        const auto ta = palf::twist_along(palf::act_on_curve(fm, Curve::convex(s, a.lo, a.hi)));
        const auto tb = palf::twist_along(palf::act_on_curve(fm, Curve::convex(s, b.lo, b.hi)));
        o.require(palf::equals(palf::compose(ta, tb), palf::compose(tb, ta)), "disjoint twists commute");
      }

      o.require(palf::compose(f, g).abelianized_action().is_identity(), "abelianized action");
      ++cases;
    }
  }
  o.require(cases >= 1000, "only " + std::to_string(cases) + " cases");
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome w1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto doc = palf::gen_dataset(Dataset::W1);
  const Palf p = doc.palf("W1");
  const auto r = palf::report(p);
  const double t = seconds_since(t0);
  o.require(p.fiber.boundaries() == 5, "fiber");
  o.require(p.cycles.size() == 4, "cycle count");
  o.require(palf::validate(p).empty(), "validation");
  o.require(r.euler == 1, "euler " + std::to_string(r.euler));
  o.require(r.h1_total.is_trivial(), "H1 = " + r.h1_total.to_string());
  o.require(r.h2_total.is_trivial(), "H2 = " + r.h2_total.to_string());
  o.require(r.h1_boundary.is_trivial(), "H1(boundary) = " + r.h1_boundary.to_string());
  o.require(t < 1.0, "took " + fmt(t));
  if (o.ok) o.detail = "chi 1, H1 0, H2 0, H1(boundary) 0, " + fmt(t);
  return o;
}

Outcome c_family() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::string summary;
  for (int m : {-5, -6, -7}) {
    const std::string at = " at m=" + std::to_string(m);
    const auto d1 = palf::gen_dataset(Dataset::C1, m);
    const auto d2 = palf::gen_dataset(Dataset::C2, m);
    const Palf p = d1.palf("C1"), q = d2.palf("C2");
    const std::size_t n = static_cast<std::size_t>(-m + 5);
    o.require(p.fiber.boundaries() == -m + 5 && q.fiber.boundaries() == -m + 5, "fiber" + at);
    o.require(p.cycles.size() == n && q.cycles.size() == n, "cycle count" + at);
    o.require(palf::validate(p).empty() && palf::validate(q).empty(), "validation" + at);
    const auto& n1 = d1.factorization("C1").cycles;
    const auto& n2 = d2.factorization("C2").cycles;
    for (std::size_t i = 6; i < n && o.ok; ++i)
      o.require(n1[i] == n2[i] && palf::curves_equal(p.cycles[i], q.cycles[i]), "delta cycles differ" + at);
    const auto r1 = palf::report(p), r2 = palf::report(q);
    o.require(r1 == r2, "invariant reports differ" + at);
    o.require(r1.euler == 2, "euler " + std::to_string(r1.euler) + at);
    summary += (summary.empty() ? "" : "; ") + std::string("m=") + std::to_string(m) + " H1(boundary) " +
               r1.h1_boundary.to_string();
  }
  const double t = seconds_since(t0);
  o.require(t < 5.0, "took " + fmt(t));

  // Observation only: a miss is expected but proves nothing.
  const auto t1 = std::chrono::steady_clock::now();
  const Palf p = palf::gen_dataset(Dataset::C1, -5).palf("C1");
  const Palf q = palf::gen_dataset(Dataset::C2, -5).palf("C2");
  const auto search = palf::equivalent_within(p, q, {4, false, 2});
  const double ts = seconds_since(t1);
  if (o.ok)
    o.detail = summary + "; " + fmt(t) + "; C1(-5) vs C2(-5) Hurwitz depth 4: " +
               (search.found ? "found" : "not found") + " (" + std::to_string(search.states_explored) +
               " states, " + fmt(ts) + ")";
  return o;
}

Outcome annulus() {
  Outcome o;
  const Surface s = Surface::planar(2);
  const Curve core = Curve::convex(s, 1, 1);
  const auto h0 = palf::boundary_h1(Palf("S1xS2", s));
  const auto h1 = palf::boundary_h1(Palf("S3", s, {core}));
  const auto h2 = palf::boundary_h1(Palf("RP3", s, {core, core}));
  o.require(h0 == palf::AbelianGroup{1, {}}, "identity gave " + h0.to_string());
  o.require(h1.is_trivial(), "one twist gave " + h1.to_string());
  o.require(h2 == palf::AbelianGroup{0, {2}}, "two twists gave " + h2.to_string());
  if (o.ok) o.detail = "Z, 0, Z/2";
  return o;
}

Outcome hurwitz_round_trip() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(4242);
  std::size_t explored = 0;
  for (int trial = 0; trial < 200 && o.ok; ++trial) {
    const Surface s = Surface::planar(trial % 2 ? 5 : 4);
    std::uniform_int_distribution<std::size_t> len(2, 6);
    const Palf p = testing_support::random_palf(rng, s, len(rng), 1);
    const auto mono = palf::total_monodromy(p);
    const auto rep = palf::report(p);
    std::uniform_int_distribution<int> kd(1, 4);
    const int k = kd(rng);
    Palf q = p;
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> idx(0, q.cycles.size() - 2);
      std::bernoulli_distribution right(0.5);
      q = palf::apply_move(q, {idx(rng), right(rng) ? palf::HurwitzMove::Direction::Right
                                                    : palf::HurwitzMove::Direction::Left});
      o.require(palf::equals(palf::total_monodromy(q), mono), "move changed the monodromy");
      o.require(palf::report(q) == rep, "move changed the invariant report");
    }
    const auto r = palf::equivalent_within(p, q, {k, false, 2});
    explored += r.states_explored;
    o.require(r.found, "trial " + std::to_string(trial) + ": no witness at depth " + std::to_string(k));
    if (r.found) {
      Palf replay = p;
      for (const auto& m : r.moves) replay = palf::apply_move(replay, m);
      o.require(testing_support::cycles_equal(replay, q), "witness does not replay");
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "took " + fmt(t));
  if (o.ok) o.detail = "200 factorizations, " + std::to_string(explored) + " states, " + fmt(t);
  return o;
}

Outcome snf_oracle() {
  Outcome o;
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::size_t square_full = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = oracle::random_matrix(rng, dim(rng), dim(rng), -5, 5);
    palf::IntMatrix im(m.size(), m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m[0].size(); ++j) im(i, j) = m[i][j];
    const auto f = palf::smith_normal_form(im);
    o.require(f.factors == oracle::invariant_factors_by_elementary_ops(m),
              "invariant factors disagree on trial " + std::to_string(trial));
    if (m.size() == m[0].size() && f.rank == m.size()) {
      palf::BigInt prod = 1;
      for (const auto& d : f.factors) prod *= d;
      o.require(prod == abs(oracle::det_cofactor(m)), "product of factors != |det|");
      ++square_full;
    }
  }
  if (o.ok) o.detail = "500 matrices, " + std::to_string(square_full) + " full-rank squares";
  return o;
}

Outcome format_and_cli() {
  Outcome o;
  std::vector<std::pair<std::string, std::string>> files{{"w1", ""}};
  for (int m : {-5, -6, -7})
    for (const char* w : {"c1", "c2"}) files.push_back({w, std::to_string(m)});

  for (const auto& [which, m] : files) {
    const fs::path path = scratch() / (which + m + ".palf");
    const Run g = cli("gen " + which + (m.empty() ? "" : " --m=" + m) + " -o \"" + path.string() + "\"");
    o.require(g.status == 0, "gen " + which + " exit " + std::to_string(g.status));
    const std::string text = slurp(path);
    const auto doc = palf::parse(text);
    const auto again = palf::parse(palf::serialize(doc));
    o.require(doc.surface() == again.surface(), "round trip surface");
    o.require(doc.curves().size() == again.curves().size(), "round trip curve count");
    for (const auto& c : doc.curves())
      o.require(again.has_curve(c.name) && again.curve(c.name).pi1_class() == c.curve.pi1_class(),
                "round trip curve " + c.name);
    for (const auto& name : doc.palf_names())
      o.require(again.has_palf(name) && again.factorization(name).cycles == doc.factorization(name).cycles,
                "round trip factorization " + name);

    const Run a = cli("invariants \"" + path.string() + "\" --format json-lines");
    const Run b = cli("invariants \"" + path.string() + "\" --format json-lines");
    o.require(a.status == 0 && a.out == b.out && !a.out.empty(), "invariants not stable for " + which + m);
    const Run v = cli("validate \"" + path.string() + "\"");
    o.require(v.status == 0, "validate exit " + std::to_string(v.status));
  }

  const fs::path bad = scratch() / "bad.palf";
  std::ofstream(bad) << "surface 0 4\ncurve a convex 1 2\npalf P a ghost\n";
  o.require(cli("validate \"" + bad.string() + "\"").status == 2, "parse error must exit 2");
  o.require(cli("frobnicate").status == 2, "unknown subcommand must exit 2");
  o.require(cli("gen c1 -o \"" + (scratch() / "x.palf").string() + "\"").status == 2, "missing --m must exit 2");

  const fs::path trivial = scratch() / "trivial.palf";
  std::ofstream(trivial) << "surface 0 4\ncurve a convex 1 2\ncurve b from a apply -s(1) -s(1) +s(1) +s(1)\n"
                            "curve u convex 1 1\npalf P a u\n";
  o.require(cli("validate \"" + trivial.string() + "\"").status == 0, "valid file must exit 0");
  const fs::path small = scratch() / "small.palf";
  std::ofstream(small) << "surface 0 3\ncurve a convex 1 1\npalf P a\n";
  o.require(cli("invariants \"" + small.string() + "\"").status == 0, "invariants exit 0");

  if (o.ok) o.detail = "7 bundled documents, exit codes 0/2, stable output";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"lantern relation through the CLI", lantern},
      {"engine property suite", engine_properties},
      {"W1 dataset invariants", w1},
      {"C-family datasets", c_family},
      {"annulus boundary-homology oracles", annulus},
      {"Hurwitz round trip", hurwitz_round_trip},
      {"Smith normal form oracle", snf_oracle},
      {"format round trip and CLI contract", format_and_cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::error_code ec;
  fs::remove_all(scratch(), ec);
  return failed ? 1 : 0;
}
