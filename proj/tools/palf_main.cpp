// palf: command line front end for genus-zero Lefschetz fibration files.
//
// Exit codes: 0 success, 1 validation failure, 2 parse or usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "palf/datasets.hpp"
#include "palf/document.hpp"
#include "palf/fibration.hpp"
#include "palf/hurwitz.hpp"
#include "palf/relations.hpp"
#include "palf/render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : palf::Error {
  using palf::Error::Error;
};

palf::PalfDocument load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return palf::parse(buf.str());
  } catch (const palf::ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.message());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::string pick_palf(const palf::PalfDocument& doc, const std::string& requested,
                      const std::string& path) {
  if (!requested.empty()) {
    if (!doc.has_palf(requested)) throw UsageError(path + ": no factorization named '" + requested + "'");
    return requested;
  }
  const auto names = doc.palf_names();
  if (names.empty()) throw UsageError(path + ": file declares no factorization");
  return names.front();
}

int cmd_validate(const std::string& path) {
  const auto doc = load(path);
  bool ok = true;
  for (const std::string& name : doc.palf_names()) {
    const auto violations = palf::validate(doc.palf(name));
    if (violations.empty()) {
      std::cout << name << ": valid (" << doc.factorization(name).cycles.size() << " cycles)\n";
      continue;
    }
    ok = false;
    for (const auto& v : violations) {
      std::cout << name << ": ";
      if (v.cycle) std::cout << "cycle " << *v.cycle << ": ";
      std::cout << v.message << '\n';
    }
  }
  return ok ? kOk : kInvalid;
}

int cmd_invariants(const std::string& path, const std::string& palf_name, const std::string& format) {
  const auto doc = load(path);
  std::vector<std::string> names = palf_name.empty() ? doc.palf_names()
                                                     : std::vector<std::string>{pick_palf(doc, palf_name, path)};
  int rc = kOk;
  for (const std::string& name : names) {
    const palf::Palf p = doc.palf(name);
    if (!palf::validate(p).empty()) rc = kInvalid;
    const auto records = palf::report(p).records();
    if (format == "json-lines") {
      for (const auto& [key, value] : records) {
        nlohmann::json j;
        j["palf"] = name;
        j["name"] = key;
        j["value"] = value;
        std::cout << j.dump() << '\n';
      }
    } else {
      std::cout << name << "  " << palf::product_string(doc.factorization(name)) << '\n';
      for (const auto& [key, value] : records) std::cout << "  " << key << ": " << value << '\n';
    }
  }
  return rc;
}

int cmd_monodromy(const std::string& path, const std::string& palf_name, const std::string& show) {
  const auto doc = load(path);
  const std::string name = pick_palf(doc, palf_name, path);
  const palf::MappingClass m = palf::total_monodromy(doc.palf(name));
  std::cout << name << " = " << palf::product_string(doc.factorization(name)) << '\n';
  if (show == "abelianized") {
    const palf::IntMatrix a = m.abelianized_action();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::cout << (j ? " " : "  ") << a(i, j);
      std::cout << '\n';
    }
  } else {
    const auto& arcs = m.arc_coords();
    for (std::size_t i = 0; i < arcs.size(); ++i)
      std::cout << "  w" << i + 1 << " = " << arcs[i].to_string() << '\n';
  }
  return kOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, const std::string& a_name,
                const std::string& b_name) {
  const auto a_doc = load(a_path);
  const auto b_doc = load(b_path);
  const palf::Palf a = a_doc.palf(pick_palf(a_doc, a_name, a_path));
  const palf::Palf b = b_doc.palf(pick_palf(b_doc, b_name, b_path));
  const palf::Comparison cmp = palf::compare(a, b);
  std::cout << "invariant          " << a.name << " | " << b.name << '\n';
  for (const auto& row : cmp.rows) {
    std::string label = row.name;
    label.resize(18, ' ');
    std::cout << label << ' ' << row.a << " | " << row.b << "  " << (row.equal ? "equal" : "different")
              << '\n';
  }
  std::cout << "factorizations: " << palf::to_string(cmp.relation) << '\n';
  return kOk;
}

int cmd_hurwitz(const std::string& a_path, const std::string& b_path, const std::string& a_name,
                const std::string& b_name, int depth, bool conjugation) {
  const auto a_doc = load(a_path);
  const auto b_doc = load(b_path);
  const palf::Palf a = a_doc.palf(pick_palf(a_doc, a_name, a_path));
  const palf::Palf b = b_doc.palf(pick_palf(b_doc, b_name, b_path));
  if (!(a.fiber == b.fiber)) throw UsageError("factorizations live on different fibers");
  palf::SearchOptions opt;
  opt.depth = depth;
  opt.conjugation = conjugation;
  const palf::SearchResult r = palf::equivalent_within(a, b, opt);
  if (!r.found) {
    std::cout << "not found within depth " << depth << " (" << r.states_explored << " states)\n";
    return kOk;
  }
  std::cout << "found:";
  if (r.moves.empty()) std::cout << " (no moves)";
  for (const auto& m : r.moves) std::cout << ' ' << m.to_string();
  std::cout << '\n';
  if (!r.conjugator.empty()) {
    std::cout << "conjugated target by:";
    for (const auto& g : r.conjugator) std::cout << ' ' << g.to_string();
    std::cout << '\n';
  }
  return kOk;
}

int cmd_gen(const std::string& which, std::optional<int> m, const std::string& out) {
  write_file(out, palf::serialize(palf::gen_dataset(palf::dataset_from_string(which), m)));
  return kOk;
}

int cmd_relations(const std::string& check, int boundaries) {
  if (check != "lantern") throw UsageError("unknown relation '" + check + "'");
  if (boundaries != 4) throw UsageError("the lantern relation is checked with --boundaries 4");
  const auto r = palf::verify_lantern(palf::Surface::planar(boundaries));
  std::cout << (r.holds ? "true" : "false") << '\n' << r.detail << '\n';
  return r.holds ? kOk : kInvalid;
}

int cmd_render(const std::string& path, const std::string& palf_name, const std::string& out) {
  const auto doc = load(path);
  write_file(out, palf::render_svg(doc, pick_palf(doc, palf_name, path)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-zero positive allowable Lefschetz fibrations"};
  app.require_subcommand(1);

  std::string file, file_b, palf_name, palf_a, palf_b, format = "text", show = "arcs", output;
  std::string which, check;
  int depth = 0, boundaries = 4;
  bool conjugation = false;
  std::optional<int> m;

  auto* validate = app.add_subcommand("validate", "check every factorization in a file");
  validate->add_option("file", file)->required();

  auto* invariants = app.add_subcommand("invariants", "homological invariants of X and its boundary");
  invariants->add_option("file", file)->required();
  invariants->add_option("--palf", palf_name);
  invariants->add_option("--format", format)->check(CLI::IsMember({"text", "json-lines"}));

  auto* monodromy = app.add_subcommand("monodromy", "total monodromy of a factorization");
  monodromy->add_option("file", file)->required();
  monodromy->add_option("--palf", palf_name)->required();
  monodromy->add_option("--show", show)->check(CLI::IsMember({"arcs", "abelianized"}));

  auto* compare = app.add_subcommand("compare", "compare two factorizations");
  compare->add_option("fileA", file)->required();
  compare->add_option("fileB", file_b)->required();
  compare->add_option("--palf-a", palf_a);
  compare->add_option("--palf-b", palf_b);

  auto* hurwitz = app.add_subcommand("hurwitz-search", "bounded search for Hurwitz equivalence");
  hurwitz->add_option("fileA", file)->required();
  hurwitz->add_option("fileB", file_b)->required();
  hurwitz->add_option("--palf-a", palf_a);
  hurwitz->add_option("--palf-b", palf_b);
  hurwitz->add_option("--depth", depth)->required()->check(CLI::NonNegativeNumber);
  hurwitz->add_flag("--conjugation", conjugation);

  auto* gen = app.add_subcommand("gen", "write a bundled dataset");
  gen->add_option("which", which)->required()->check(CLI::IsMember({"w1", "c1", "c2"}));
  gen->add_option("--m", m);
  gen->add_option("-o,--output", output)->required();

  auto* relations = app.add_subcommand("relations", "check a classical relation in the engine");
  relations->add_option("--check", check)->required();
  relations->add_option("--boundaries", boundaries);

  auto* render = app.add_subcommand("render", "draw the vanishing cycles as SVG");
  render->add_option("file", file)->required();
  render->add_option("--palf", palf_name)->required();
  render->add_option("-o,--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*invariants) return cmd_invariants(file, palf_name, format);
    if (*monodromy) return cmd_monodromy(file, palf_name, show);
    if (*compare) return cmd_compare(file, file_b, palf_a, palf_b);
    if (*hurwitz) return cmd_hurwitz(file, file_b, palf_a, palf_b, depth, conjugation);
    if (*gen) return cmd_gen(which, m, output);
    if (*relations) return cmd_relations(check, boundaries);
    if (*render) return cmd_render(file, palf_name, output);
  } catch (const UsageError& e) {
    std::cerr << "palf: " << e.what() << '\n';
    return kUsage;
  } catch (const palf::Error& e) {
    std::cerr << "palf: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
