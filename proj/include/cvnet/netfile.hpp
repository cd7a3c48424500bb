#pragma once

#include <map>
#include <string>
#include <vector>

#include "cvnet/network.hpp"

namespace cvnet {

// theta/phi value in a netfile: a literal, a $variable bound at run time, or
// (phi only) the matched-phase rule.
struct AngleExpr {
  enum class Kind { Value, Variable, Matched };
  Kind kind = Kind::Value;
  double value = 0.0;
  std::string variable;
};

struct ModeDecl {
  std::string name;
  bool pure = true;
  double a = 0.5;  // ignored for pure declarations
  double b_mag = 0.0;
  double b_arg = 0.0;
};

struct SplitterDecl {
  std::string name;
  std::string mode_a;
  std::string mode_b;
  AngleExpr theta;
  AngleExpr phi;
};

struct ReportDecl {
  Metric metric = Metric::LogNeg;
  std::vector<std::string> party_a;
  std::vector<std::string> party_b;
};

// Parsed netfile. Line-oriented grammar, '#' starts a comment:
//
//   mode <name> pure <|b|> <arg_b>
//   mode <name> mixed <a> <|b|> <arg_b>
//   bs <name> <modeX> <modeY> theta=<real|$var> phi=<real|$var|matched>
//   report <logneg|xi|sn|contangle|residual> <labels>:<labels>
//
// Report labels are comma-separated mode names; commas may be omitted when
// the concatenation tokenizes unambiguously (longest declared name first).
// Angles are radians. parse(render()) reproduces the netfile exactly.
class Netfile {
 public:
  static Netfile parse(const std::string& text);

  std::string render() const;

  // $variables in order of first appearance.
  std::vector<std::string> placeholders() const;

  // Resolves variables and matched phases and validates the result. Matched
  // phases are computed progressively from the off-diagonals of the two
  // coupled modes at the point the splitter fires. Throws UnboundVariable
  // when a placeholder has no binding or a binding names no placeholder.
  NetworkSpec build(const std::map<std::string, double>& bindings = {}) const;

  const std::vector<ModeDecl>& modes() const { return modes_; }
  const std::vector<SplitterDecl>& splitters() const { return splitters_; }
  const std::vector<ReportDecl>& reports() const { return reports_; }

 private:
  std::vector<ModeDecl> modes_;
  std::vector<SplitterDecl> splitters_;
  std::vector<ReportDecl> reports_;
};

Netfile parse_netfile(const std::string& text);

}  // namespace cvnet
