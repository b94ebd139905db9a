#include "palf/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace palf {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

void PalfDocument::claim_name(const std::string& name) const {
  if (has_curve(name) || has_palf(name)) throw Error("duplicate name '" + name + "'");
}

const Curve& PalfDocument::add_convex(const std::string& name, int lo, int hi) {
  claim_name(name);
  curves_.push_back({name, {}, {}, Curve::convex(surface_, lo, hi)});
  return curves_.back().curve;
}

const Curve& PalfDocument::add_derived(const std::string& name, const std::string& base,
                                       std::vector<Generator> applied) {
  claim_name(name);
  const Curve& from = curve(base);
  for (const Generator& g : applied) g.check(surface_);
  Curve c = act_on_curve(MappingWord(surface_, applied), from);
  curves_.push_back({name, base, std::move(applied), std::move(c)});
  return curves_.back().curve;
}

void PalfDocument::add_palf(const std::string& name, std::vector<std::string> cycles) {
  claim_name(name);
  for (const std::string& c : cycles)
    if (!has_curve(c)) throw Error("undeclared curve '" + c + "' in factorization '" + name + "'");
  factorizations_.push_back({name, std::move(cycles)});
}

bool PalfDocument::has_curve(const std::string& name) const {
  return std::any_of(curves_.begin(), curves_.end(), [&](const CurveDecl& d) { return d.name == name; });
}

const Curve& PalfDocument::curve(const std::string& name) const {
  for (const CurveDecl& d : curves_)
    if (d.name == name) return d.curve;
  throw Error("undeclared curve '" + name + "'");
}

bool PalfDocument::has_palf(const std::string& name) const {
  return std::any_of(factorizations_.begin(), factorizations_.end(),
                     [&](const FactorizationDecl& f) { return f.name == name; });
}

const FactorizationDecl& PalfDocument::factorization(const std::string& name) const {
  for (const FactorizationDecl& f : factorizations_)
    if (f.name == name) return f;
  throw Error("no factorization named '" + name + "'");
}

Palf PalfDocument::palf(const std::string& name) const {
  const FactorizationDecl& f = factorization(name);
  Palf p(name, surface_);
  for (const std::string& c : f.cycles) p.cycles.push_back(curve(c));
  return p;
}

std::vector<std::string> PalfDocument::palf_names() const {
  std::vector<std::string> out;
  for (const FactorizationDecl& f : factorizations_) out.push_back(f.name);
  return out;
}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '-' ||
           ch == '\'';
  });
}

class LineParser {
 public:
  LineParser(std::string_view line, int number) : line_(line), number_(number) {}

  [[noreturn]] void fail(int column, const std::string& msg,
                         ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, number_, column, msg);
  }

  std::vector<Token> tokens() const {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line_.size()) {
      while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
      const std::size_t start = i;
      while (i < line_.size() && !std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
      if (i > start)
        out.push_back({std::string(line_.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    return out;
  }

  int integer(const Token& t) const {
    int v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) fail(t.column, "expected an integer, found '" + t.text + "'");
    return v;
  }

  // Signed generators from byte offset `from` to end of line.
  std::vector<std::pair<Generator, int>> generators(std::size_t from) const {
    std::vector<std::pair<Generator, int>> out;
    std::size_t i = from;
    auto skip_ws = [&] {
      while (i < line_.size() && std::isspace(static_cast<unsigned char>(line_[i]))) ++i;
    };
    auto col = [&] { return static_cast<int>(i) + 1; };
    auto expect = [&](char ch) {
      skip_ws();
      if (i >= line_.size() || line_[i] != ch)
        fail(col(), std::string("expected '") + ch + "'");
      ++i;
    };
    auto number = [&] {
      skip_ws();
      const std::size_t start = i;
      while (i < line_.size() && std::isdigit(static_cast<unsigned char>(line_[i]))) ++i;
      if (i == start) fail(col(), "expected a hole index");
      int v = 0;
      const auto [ptr, ec] = std::from_chars(line_.data() + start, line_.data() + i, v);
      if (ec != std::errc()) fail(static_cast<int>(start) + 1, "hole index out of range");
      return v;
    };
    for (;;) {
      skip_ws();
      if (i >= line_.size()) break;
      const int start = col();
      if (line_[i] != '+' && line_[i] != '-')
        fail(start, "expected a signed generator like +c(1,2) or -s(3)");
      const int sign = line_[i] == '+' ? 1 : -1;
      ++i;
      skip_ws();
      if (i >= line_.size()) fail(col(), "expected 'c' or 's' after the sign");
      const char kind = line_[i++];
      if (kind == 'c') {
        expect('(');
        const int lo = number();
        expect(',');
        const int hi = number();
        expect(')');
        out.push_back({Generator::twist(lo, hi, sign), start});
      } else if (kind == 's') {
        expect('(');
        const int k = number();
        expect(')');
        out.push_back({Generator::half_twist(k, sign), start});
      } else {
        fail(col() - 1, std::string("unknown generator '") + kind + "'");
      }
    }
    return out;
  }

  std::size_t offset_of(const Token& t) const { return static_cast<std::size_t>(t.column - 1); }

 private:
  std::string_view line_;
  int number_;
};

}  // namespace

PalfDocument parse(std::string_view text) {
  std::optional<PalfDocument> doc;
  std::vector<std::string> header;
  bool in_header = true;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    const std::size_t hash = raw.find('#');
    std::string_view code = raw.substr(0, hash);
    const bool blank = std::all_of(code.begin(), code.end(),
                                   [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    if (blank) {
      if (in_header && hash != std::string_view::npos) {
        std::string_view c = raw.substr(hash + 1);
        if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
        header.emplace_back(c);
      }
      if (eol == text.size()) break;
      continue;
    }
    in_header = false;

    LineParser lp(code, number);
    const auto toks = lp.tokens();
    const Token& head = toks.front();
    auto semantic = [&](const Token& at, const Error& e) -> void {
      lp.fail(at.column, e.what(), ParseError::Kind::Semantic);
    };

    if (head.text == "surface") {
      if (toks.size() != 3) lp.fail(head.column, "expected 'surface <genus> <boundaries>'");
      if (doc) lp.fail(head.column, "surface declared twice", ParseError::Kind::Semantic);
      const int genus = lp.integer(toks[1]);
      const int boundaries = lp.integer(toks[2]);
      if (genus != 0)
        lp.fail(toks[1].column,
                "unsupported genus " + std::to_string(genus) + ": only planar fibers are handled",
                ParseError::Kind::UnsupportedGenus);
      try {
        doc.emplace(Surface(genus, boundaries));
      } catch (const Error& e) {
        semantic(toks[2], e);
      }
      doc->header = header;
    } else if (head.text == "curve") {
      if (!doc) lp.fail(head.column, "curve declared before the surface", ParseError::Kind::Semantic);
      if (toks.size() < 3) lp.fail(head.column, "expected 'curve <name> convex|from ...'");
      const Token& name = toks[1];
      if (!is_name(name.text)) lp.fail(name.column, "invalid name '" + name.text + "'");
      if (toks[2].text == "convex") {
        if (toks.size() != 5) lp.fail(toks[2].column, "expected 'convex <lo> <hi>'");
        const int lo = lp.integer(toks[3]);
        const int hi = lp.integer(toks[4]);
        try {
          doc->add_convex(name.text, lo, hi);
        } catch (const Error& e) {
          semantic(doc->has_curve(name.text) || doc->has_palf(name.text) ? name : toks[3], e);
        }
      } else if (toks[2].text == "from") {
        if (toks.size() < 5 || toks[4].text != "apply")
          lp.fail(toks[2].column, "expected 'from <base-name> apply <generators>'");
        const Token& base = toks[3];
        if (doc->has_curve(name.text) || doc->has_palf(name.text))
          lp.fail(name.column, "duplicate name '" + name.text + "'", ParseError::Kind::Semantic);
        if (!doc->has_curve(base.text))
          lp.fail(base.column, "undeclared curve '" + base.text + "'", ParseError::Kind::Semantic);
        const auto gens = lp.generators(lp.offset_of(toks[4]) + 5);
        std::vector<Generator> applied;
        for (const auto& [g, column] : gens) {
          try {
            g.check(doc->surface());
          } catch (const Error& e) {
            lp.fail(column, e.what(), ParseError::Kind::Semantic);
          }
          applied.push_back(g);
        }
        doc->add_derived(name.text, base.text, std::move(applied));
      } else {
        lp.fail(toks[2].column, "expected 'convex' or 'from', found '" + toks[2].text + "'");
      }
    } else if (head.text == "palf") {
      if (!doc) lp.fail(head.column, "palf declared before the surface", ParseError::Kind::Semantic);
      if (toks.size() < 2) lp.fail(head.column, "expected 'palf <name> <curves...>'");
      const Token& name = toks[1];
      if (!is_name(name.text)) lp.fail(name.column, "invalid name '" + name.text + "'");
      if (doc->has_curve(name.text) || doc->has_palf(name.text))
        lp.fail(name.column, "duplicate name '" + name.text + "'", ParseError::Kind::Semantic);
      std::vector<std::string> cycles;
      for (std::size_t k = 2; k < toks.size(); ++k) {
        if (!doc->has_curve(toks[k].text))
          lp.fail(toks[k].column, "undeclared curve '" + toks[k].text + "'", ParseError::Kind::Semantic);
        cycles.push_back(toks[k].text);
      }
      doc->add_palf(name.text, std::move(cycles));
    } else {
      lp.fail(head.column, "unknown directive '" + head.text + "'");
    }
    if (eol == text.size()) break;
  }
  if (!doc) throw ParseError(ParseError::Kind::Semantic, number, 1, "missing surface declaration");
  return std::move(*doc);
}

std::string product_string(const FactorizationDecl& f) {
  if (f.cycles.empty()) return "1";
  std::string out;
  for (auto it = f.cycles.rbegin(); it != f.cycles.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += "t_{" + *it + "}";
  }
  return out;
}

std::string serialize(const PalfDocument& doc) {
  std::ostringstream os;
  for (const std::string& h : doc.header) os << (h.empty() ? "#" : "# " + h) << '\n';
  if (!doc.header.empty()) os << '\n';
  os << "surface " << doc.surface().genus() << ' ' << doc.surface().boundaries() << '\n';
  if (!doc.curves().empty()) os << '\n';
  for (const CurveDecl& d : doc.curves()) {
    os << "curve " << d.name;
    if (d.is_convex()) {
      os << " convex " << d.curve.lo() << ' ' << d.curve.hi();
    } else {
      os << " from " << d.base << " apply";
      for (const Generator& g : d.applied) os << ' ' << g.to_string();
    }
    os << '\n';
  }
  for (const FactorizationDecl& f : doc.factorizations()) {
    os << "\n# monodromy " << product_string(f) << '\n';
    os << "palf " << f.name;
    for (const std::string& c : f.cycles) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

}  // namespace palf
