#include "cvnet/netfile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>

namespace cvnet {
namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back(
        {line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

double parse_number(const Token& tok, int line_no) {
  double value = 0.0;
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw SyntaxError("expected a number, got '" + tok.text + "'", line_no,
                      tok.column);
  }
  return value;
}

AngleExpr parse_angle(const Token& tok, const char* prefix, bool allow_matched,
                      int line_no) {
  const std::string want = std::string(prefix) + "=";
  if (tok.text.rfind(want, 0) != 0) {
    throw SyntaxError("expected '" + want + "...', got '" + tok.text + "'",
                      line_no, tok.column);
  }
  const std::string rest = tok.text.substr(want.size());
  AngleExpr expr;
  if (rest == "matched") {
    if (!allow_matched) {
      throw SyntaxError("only phi may be 'matched'", line_no, tok.column);
    }
    expr.kind = AngleExpr::Kind::Matched;
    return expr;
  }
  if (!rest.empty() && rest[0] == '$') {
    const std::string var = rest.substr(1);
    if (!valid_name(var)) {
      throw SyntaxError("invalid variable name '" + rest + "'", line_no,
                        tok.column);
    }
    expr.kind = AngleExpr::Kind::Variable;
    expr.variable = var;
    return expr;
  }
  expr.kind = AngleExpr::Kind::Value;
  expr.value = parse_number({rest, tok.column + static_cast<int>(want.size())},
                            line_no);
  return expr;
}

// Splits one side of a report bipartition into declared mode names. Commas
// separate labels explicitly; within a comma piece, names are matched
// greedily, longest declared name first.
std::vector<std::string> split_labels(const std::string& side,
                                      const std::vector<ModeDecl>& modes,
                                      int line_no, int column) {
  std::vector<std::string> by_length;
  for (const auto& m : modes) by_length.push_back(m.name);
  std::sort(by_length.begin(), by_length.end(),
            [](const std::string& x, const std::string& y) {
              return x.size() != y.size() ? x.size() > y.size() : x < y;
            });

  std::vector<std::string> labels;
  std::size_t piece_start = 0;
  while (piece_start <= side.size()) {
    std::size_t comma = side.find(',', piece_start);
    if (comma == std::string::npos) comma = side.size();
    const std::string piece = side.substr(piece_start, comma - piece_start);
    if (piece.empty()) {
      throw SyntaxError("empty label in report bipartition", line_no, column);
    }
    std::size_t at = 0;
    while (at < piece.size()) {
      bool found = false;
      for (const auto& name : by_length) {
        if (piece.compare(at, name.size(), name) == 0) {
          labels.push_back(name);
          at += name.size();
          found = true;
          break;
        }
      }
      if (!found) {
        throw UnknownLabel("line " + std::to_string(line_no) +
                           ": no declared mode matches '" + piece.substr(at) +
                           "'");
      }
    }
    if (comma == side.size()) break;
    piece_start = comma + 1;
  }
  return labels;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render_angle(const char* prefix, const AngleExpr& expr) {
  std::string out = std::string(prefix) + "=";
  switch (expr.kind) {
    case AngleExpr::Kind::Value:
      return out + format_double(expr.value);
    case AngleExpr::Kind::Variable:
      return out + "$" + expr.variable;
    case AngleExpr::Kind::Matched:
      return out + "matched";
  }
  return out;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out;
}

Metric parse_metric(const Token& tok, int line_no) {
  if (tok.text == "logneg") return Metric::LogNeg;
  if (tok.text == "xi") return Metric::Xi;
  if (tok.text == "sn") return Metric::Sn;
  if (tok.text == "contangle") return Metric::Contangle;
  if (tok.text == "residual") return Metric::Residual;
  throw SyntaxError("unknown report metric '" + tok.text + "'", line_no,
                    tok.column);
}

}  // namespace

Netfile Netfile::parse(const std::string& text) {
  Netfile nf;
  std::set<std::string> mode_names;
  std::set<std::string> splitter_names;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];

    if (head.text == "mode") {
      if (tokens.size() != 5 && tokens.size() != 6) {
        throw SyntaxError(
            "mode takes 'mode <name> pure <|b|> <arg>' or "
            "'mode <name> mixed <a> <|b|> <arg>'",
            line_no, head.column);
      }
      ModeDecl decl;
      decl.name = tokens[1].text;
      if (!valid_name(decl.name)) {
        throw SyntaxError("invalid mode name '" + decl.name + "'", line_no,
                          tokens[1].column);
      }
      if (!mode_names.insert(decl.name).second) {
        throw DuplicateMode("line " + std::to_string(line_no) +
                            ": mode '" + decl.name + "' already declared");
      }
      const std::string& kind = tokens[2].text;
      if (kind == "pure" && tokens.size() == 5) {
        decl.pure = true;
        decl.b_mag = parse_number(tokens[3], line_no);
        decl.b_arg = parse_number(tokens[4], line_no);
      } else if (kind == "mixed" && tokens.size() == 6) {
        decl.pure = false;
        decl.a = parse_number(tokens[3], line_no);
        decl.b_mag = parse_number(tokens[4], line_no);
        decl.b_arg = parse_number(tokens[5], line_no);
      } else {
        throw SyntaxError("expected 'pure' or 'mixed' with matching arity",
                          line_no, tokens[2].column);
      }
      nf.modes_.push_back(std::move(decl));
    } else if (head.text == "bs") {
      if (tokens.size() != 6) {
        throw SyntaxError(
            "bs takes 'bs <name> <modeX> <modeY> theta=<...> phi=<...>'",
            line_no, head.column);
      }
      SplitterDecl decl;
      decl.name = tokens[1].text;
      if (!valid_name(decl.name)) {
        throw SyntaxError("invalid splitter name '" + decl.name + "'", line_no,
                          tokens[1].column);
      }
      if (!splitter_names.insert(decl.name).second) {
        throw DuplicateMode("line " + std::to_string(line_no) +
                            ": splitter '" + decl.name +
                            "' already declared");
      }
      decl.mode_a = tokens[2].text;
      decl.mode_b = tokens[3].text;
      for (int t : {2, 3}) {
        if (!mode_names.count(tokens[t].text)) {
          throw UnknownLabel("line " + std::to_string(line_no) +
                             ": splitter references undeclared mode '" +
                             tokens[t].text + "'");
        }
      }
      if (decl.mode_a == decl.mode_b) {
        throw DuplicateMode("line " + std::to_string(line_no) +
                            ": splitter couples mode '" + decl.mode_a +
                            "' with itself");
      }
      decl.theta = parse_angle(tokens[4], "theta", false, line_no);
      decl.phi = parse_angle(tokens[5], "phi", true, line_no);
      nf.splitters_.push_back(std::move(decl));
    } else if (head.text == "report") {
      if (tokens.size() != 3) {
        throw SyntaxError("report takes 'report <metric> <labels>:<labels>'",
                          line_no, head.column);
      }
      ReportDecl decl;
      decl.metric = parse_metric(tokens[1], line_no);
      const std::string& bipart = tokens[2].text;
      const std::size_t colon = bipart.find(':');
      if (colon == std::string::npos ||
          bipart.find(':', colon + 1) != std::string::npos) {
        throw SyntaxError("bipartition needs exactly one ':'", line_no,
                          tokens[2].column);
      }
      decl.party_a = split_labels(bipart.substr(0, colon), nf.modes_, line_no,
                                  tokens[2].column);
      decl.party_b = split_labels(bipart.substr(colon + 1), nf.modes_, line_no,
                                  tokens[2].column);
      std::set<std::string> seen;
      for (const auto& l : decl.party_a) {
        if (!seen.insert(l).second) {
          throw SyntaxError("report lists mode '" + l + "' twice", line_no,
                            tokens[2].column);
        }
      }
      for (const auto& l : decl.party_b) {
        if (!seen.insert(l).second) {
          throw SyntaxError(
              "report bipartition is not disjoint in mode '" + l + "'",
              line_no, tokens[2].column);
        }
      }
      if (decl.metric == Metric::Sn &&
          (decl.party_a.size() != 1 || decl.party_b.size() != 1)) {
        throw SyntaxError("sn reports take exactly one mode per side", line_no,
                          tokens[2].column);
      }
      if (decl.metric == Metric::Residual &&
          (decl.party_a.size() != 1 || decl.party_b.size() != 2)) {
        throw SyntaxError("residual reports take one mode versus two", line_no,
                          tokens[2].column);
      }
      nf.reports_.push_back(std::move(decl));
    } else {
      throw SyntaxError("unknown directive '" + head.text + "'", line_no,
                        head.column);
    }
  }
  return nf;
}

std::string Netfile::render() const {
  std::string out;
  for (const auto& m : modes_) {
    out += "mode " + m.name;
    if (m.pure) {
      out += " pure " + format_double(m.b_mag) + " " + format_double(m.b_arg);
    } else {
      out += " mixed " + format_double(m.a) + " " + format_double(m.b_mag) +
             " " + format_double(m.b_arg);
    }
    out += '\n';
  }
  for (const auto& s : splitters_) {
    out += "bs " + s.name + " " + s.mode_a + " " + s.mode_b + " " +
           render_angle("theta", s.theta) + " " + render_angle("phi", s.phi) +
           '\n';
  }
  for (const auto& r : reports_) {
    out += "report " + std::string(metric_name(r.metric)) + " " +
           join_labels(r.party_a) + ":" + join_labels(r.party_b) + '\n';
  }
  return out;
}

std::vector<std::string> Netfile::placeholders() const {
  std::vector<std::string> names;
  const auto add = [&names](const AngleExpr& expr) {
    if (expr.kind != AngleExpr::Kind::Variable) return;
    if (std::find(names.begin(), names.end(), expr.variable) == names.end()) {
      names.push_back(expr.variable);
    }
  };
  for (const auto& s : splitters_) {
    add(s.theta);
    add(s.phi);
  }
  return names;
}

NetworkSpec Netfile::build(const std::map<std::string, double>& bindings) const {
  const auto holes = placeholders();
  for (const auto& [name, value] : bindings) {
    if (std::find(holes.begin(), holes.end(), name) == holes.end()) {
      throw UnboundVariable("binding '" + name +
                            "' matches no placeholder in the netfile");
    }
  }
  const auto resolve = [&bindings](const AngleExpr& expr) {
    const auto it = bindings.find(expr.variable);
    if (it == bindings.end()) {
      throw UnboundVariable("variable '$" + expr.variable +
                            "' has no binding");
    }
    return it->second;
  };

  NetworkSpec spec;
  for (const auto& m : modes_) {
    spec.inputs.emplace_back(m.name, m.pure
                                         ? pure_state(m.b_mag, m.b_arg)
                                         : make_state(m.a, m.b_mag, m.b_arg));
  }

  // Progressive pass: matched phases read the off-diagonals of the two
  // coupled modes at the moment the splitter fires.
  if (!splitters_.empty()) {
    MultiModeCM cm = MultiModeCM::from_modes(spec.inputs);
    for (const auto& s : splitters_) {
      const double theta = s.theta.kind == AngleExpr::Kind::Value
                               ? s.theta.value
                               : resolve(s.theta);
      double phi = 0.0;
      switch (s.phi.kind) {
        case AngleExpr::Kind::Value:
          phi = s.phi.value;
          break;
        case AngleExpr::Kind::Variable:
          phi = resolve(s.phi);
          break;
        case AngleExpr::Kind::Matched:
          phi = matched_phase(cm.mode_offdiag(s.mode_a),
                              cm.mode_offdiag(s.mode_b));
          break;
      }
      spec.splitters.emplace_back(theta, phi, s.mode_a, s.mode_b);
      cm = apply_bs(cm, spec.splitters.back());
    }
  }

  for (const auto& r : reports_) {
    spec.reports.push_back({r.metric, r.party_a, r.party_b});
  }
  spec.validate();
  return spec;
}

Netfile parse_netfile(const std::string& text) { return Netfile::parse(text); }

}  // namespace cvnet
