#pragma once

// The .palf text format.
//
//   # leading comment lines form the document header
//   surface <genus> <boundaries>
//   curve <name> convex <lo> <hi>
//   curve <name> from <base-name> apply <signed-generator> ...
//   palf <name> <curve-name> ...          (application order, first applied first)
//
// A signed generator is +c(lo,hi) / -c(lo,hi) for a Dehn twist on the convex
// curve around holes lo..hi, or +s(i) / -s(i) for the half twist exchanging
// holes i and i+1. Generators after `apply` act left to right. '#' starts a
// comment anywhere on a line. Curves and factorizations share one namespace.

#include <string>
#include <string_view>
#include <vector>

#include "palf/error.hpp"
#include "palf/fibration.hpp"

namespace palf {

class ParseError : public Error {
 public:
  enum class Kind { Syntax, Semantic, UnsupportedGenus };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string message_;
};

struct CurveDecl {
  std::string name;
  // Empty for `convex` declarations.
  std::string base;
  std::vector<Generator> applied;
  Curve curve;

  bool is_convex() const { return base.empty(); }
};

struct FactorizationDecl {
  std::string name;
  std::vector<std::string> cycles;
};

class PalfDocument {
 public:
  explicit PalfDocument(const Surface& surface) : surface_(surface) {}

  std::vector<std::string> header;

  const Surface& surface() const { return surface_; }
  const std::vector<CurveDecl>& curves() const { return curves_; }
  const std::vector<FactorizationDecl>& factorizations() const { return factorizations_; }

  // Builders; throw palf::Error on duplicate or undeclared names and bad ranges.
  const Curve& add_convex(const std::string& name, int lo, int hi);
  const Curve& add_derived(const std::string& name, const std::string& base,
                           std::vector<Generator> applied);
  void add_palf(const std::string& name, std::vector<std::string> cycles);

  bool has_curve(const std::string& name) const;
  const Curve& curve(const std::string& name) const;
  bool has_palf(const std::string& name) const;
  // Throws palf::Error for unknown names.
  Palf palf(const std::string& name) const;
  const FactorizationDecl& factorization(const std::string& name) const;
  std::vector<std::string> palf_names() const;

 private:
  void claim_name(const std::string& name) const;

  Surface surface_;
  std::vector<CurveDecl> curves_;
  std::vector<FactorizationDecl> factorizations_;
};

PalfDocument parse(std::string_view text);
std::string serialize(const PalfDocument& doc);

// The monodromy as written, rightmost factor first applied: "t_{a4} t_{a3} t_{a2} t_{a1}".
std::string product_string(const FactorizationDecl& f);

}  // namespace palf
