#include "trijac/relation_expr.hpp"

#include <cctype>

namespace trijac {

Expr Expr::sum(std::vector<Expr> children) {
  std::vector<Expr> flat;
  ParamPoly scalars;
  bool saw_scalar = false;
  for (auto& ch : children) {
    if (ch.kind == Kind::Sum) {
      for (auto& g : ch.args) {
        if (g.kind == Kind::Scalar) {
          scalars += g.scalar;
          saw_scalar = true;
        } else
          flat.push_back(std::move(g));
      }
    } else if (ch.kind == Kind::Scalar) {
      scalars += ch.scalar;
      saw_scalar = true;
    } else {
      flat.push_back(std::move(ch));
    }
  }
  if (saw_scalar && !scalars.is_zero()) flat.push_back(scalar_of(scalars));
  if (flat.empty()) return scalar_of(ParamPoly(0));
  if (flat.size() == 1) return flat[0];
  Expr e;
  e.kind = Kind::Sum;
  e.args = std::move(flat);
  return e;
}

Expr Expr::prod(std::vector<Expr> children) {
  std::vector<Expr> flat;
  ParamPoly scalar(1);
  for (auto& ch : children) {
    if (ch.kind == Kind::Prod) {
      for (auto& g : ch.args) {
        if (g.kind == Kind::Scalar)
          scalar *= g.scalar;
        else
          flat.push_back(std::move(g));
      }
    } else if (ch.kind == Kind::Scalar) {
      scalar *= ch.scalar;
    } else {
      flat.push_back(std::move(ch));
    }
  }
  if (scalar.is_zero()) return scalar_of(ParamPoly(0));
  if (flat.empty()) return scalar_of(scalar);
  if (!(scalar == ParamPoly(1))) flat.insert(flat.begin(), scalar_of(scalar));
  if (flat.size() == 1) return flat[0];
  Expr e;
  e.kind = Kind::Prod;
  e.args = std::move(flat);
  return e;
}

Expr Expr::bracket(Expr l, Expr r) {
  Expr e;
  e.kind = Kind::Bracket;
  e.args = {std::move(l), std::move(r)};
  return e;
}

Expr Expr::brace(Expr l, Expr r) {
  Expr e;
  e.kind = Kind::Brace;
  e.args = {std::move(l), std::move(r)};
  return e;
}

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Scalar:
      return scalar == o.scalar;
    case Kind::Gen:
      return name == o.name;
    default:
      if (args.size() != o.args.size()) return false;
      for (size_t i = 0; i < args.size(); ++i)
        if (!(args[i] == o.args[i])) return false;
      return true;
  }
}

void Expr::collect_generators(std::vector<std::string>& out) const {
  if (kind == Kind::Gen) out.push_back(name);
  for (const auto& ch : args) ch.collect_generators(out);
}

namespace {

// Printer: sums join with +/-, scalar factors kept parenthesized.
struct Printer {
  static bool scalar_is_negative(const ParamPoly& p) {
    return !p.is_zero() && p.leading().second.is_negative();
  }

  // Returns body text and whether a leading minus was factored out.
  static std::pair<std::string, bool> summand(const Expr& e) {
    if (e.kind == Expr::Kind::Scalar) {
      if (scalar_is_negative(e.scalar)) return {(-e.scalar).to_text(), true};
      return {e.scalar.to_text(), false};
    }
    if (e.kind == Expr::Kind::Prod && e.args[0].kind == Expr::Kind::Scalar &&
        scalar_is_negative(e.args[0].scalar)) {
      Expr flipped = e;
      flipped.args[0].scalar = -flipped.args[0].scalar;
      return {factor_chain(flipped), true};
    }
    return {print(e), false};
  }

  static std::string factor_chain(const Expr& prod) {
    std::string out;
    for (size_t i = 0; i < prod.args.size(); ++i) {
      if (i) out += "*";
      out += factor(prod.args[i]);
    }
    return out;
  }

  static std::string factor(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Scalar:
        return "(" + e.scalar.to_text() + ")";
      case Expr::Kind::Gen:
        return e.name;
      case Expr::Kind::Bracket:
      case Expr::Kind::Brace:
        return print(e);
      default:
        return "(" + print(e) + ")";
    }
  }

  static std::string print(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Scalar:
        return e.scalar.to_text();
      case Expr::Kind::Gen:
        return e.name;
      case Expr::Kind::Bracket:
        return "[" + print(e.args[0]) + ", " + print(e.args[1]) + "]";
      case Expr::Kind::Brace:
        return "{" + print(e.args[0]) + ", " + print(e.args[1]) + "}";
      case Expr::Kind::Prod:
        return factor_chain(e);
      case Expr::Kind::Sum: {
        std::string out;
        for (size_t i = 0; i < e.args.size(); ++i) {
          auto [body, neg] = summand(e.args[i]);
          if (i == 0)
            out += neg ? "-" + body : body;
          else
            out += neg ? " - " + body : " + " + body;
        }
        return out;
      }
    }
    return "";
  }
};

struct RelParser {
  const std::string& s;
  size_t pos = 0;

  explicit RelParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  Expr expr() {
    std::vector<Expr> terms;
    terms.push_back(term());
    while (true) {
      if (eat('+'))
        terms.push_back(term());
      else if (eat('-'))
        terms.push_back(Expr::prod({Expr::scalar_of(ParamPoly(-1)), term()}));
      else
        break;
    }
    return Expr::sum(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(power());
    while (true) {
      skip_ws();
      if (eat('*'))
        factors.push_back(power());
      else if (pos < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '[' ||
                s[pos] == '{' || s[pos] == '('))
        factors.push_back(power());
      else
        break;
    }
    return Expr::prod(std::move(factors));
  }

  Expr power() {
    Expr base = atom();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw SyntaxError("expected exponent", pos);
      int e = std::stoi(s.substr(start, pos - start));
      if (base.kind != Expr::Kind::Scalar)
        throw SyntaxError("'^' applies to scalar subexpressions only", start);
      return Expr::scalar_of(base.scalar.pow(e));
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Expr e = expr();
      if (!eat(')')) throw SyntaxError("unbalanced parenthesis", pos);
      return e;
    }
    if (c == '[') {
      ++pos;
      Expr l = expr();
      if (!eat(',')) throw SyntaxError("expected ',' in commutator", pos);
      Expr r = expr();
      if (!eat(']')) throw SyntaxError("unbalanced bracket", pos);
      return Expr::bracket(std::move(l), std::move(r));
    }
    if (c == '{') {
      ++pos;
      Expr l = expr();
      if (!eat(',')) throw SyntaxError("expected ',' in anticommutator", pos);
      Expr r = expr();
      if (!eat('}')) throw SyntaxError("unbalanced brace", pos);
      return Expr::brace(std::move(l), std::move(r));
    }
    if (c == '-') {
      ++pos;
      return Expr::prod({Expr::scalar_of(ParamPoly(-1)), power()});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string digits = s.substr(start, pos - start);
      size_t save = pos;
      skip_ws();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        skip_ws();
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (dstart != pos)
          return Expr::scalar_of(
              ParamPoly(ExactScalar::from_text(digits + "/" + s.substr(dstart, pos - dstart))));
        pos = save;
      } else {
        pos = save;
      }
      return Expr::scalar_of(ParamPoly(ExactScalar::from_text(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "a" || name == "b" || name == "c")
        return Expr::scalar_of(ParamPoly::variable(*var_from_name(name)));
      return Expr::gen(name);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
  }

  std::vector<Expr> chain() {
    std::vector<Expr> out;
    out.push_back(expr());
    while (eat('=')) out.push_back(expr());
    skip_ws();
    if (pos != s.size()) throw SyntaxError("trailing input", pos);
    return out;
  }
};

}  // namespace

std::string Expr::print() const { return Printer::print(*this); }

std::vector<Expr> parse_expr_chain(const std::string& text) {
  RelParser p(text);
  return p.chain();
}

Expr parse_expr(const std::string& text) {
  auto chain = parse_expr_chain(text);
  if (chain.size() != 1) throw SyntaxError("expected a single expression", 0);
  return chain[0];
}

RelationSpec parse_relation(const std::string& line) {
  size_t p1 = line.find("::");
  size_t p2 = p1 == std::string::npos ? std::string::npos : line.find("::", p1 + 2);
  if (p2 == std::string::npos)
    throw SyntaxError("catalogue line needs 'id :: tags :: relation'", 0);
  auto trim = [](std::string t) {
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  RelationSpec spec;
  spec.id = trim(line.substr(0, p1));
  if (spec.id.empty()) throw SyntaxError("empty relation id", 0);
  std::string tags = trim(line.substr(p1 + 2, p2 - p1 - 2));
  if (tags == "vd") {
    spec.kind = RelationSpec::Kind::Operator;
  } else if (tags == "v") {
    spec.kind = RelationSpec::Kind::Operator;
    spec.in_degree = false;
  } else if (tags == "d") {
    spec.kind = RelationSpec::Kind::Operator;
    spec.in_variable = false;
  } else if (tags == "act") {
    spec.kind = RelationSpec::Kind::Action;
  } else if (tags == "actx") {
    spec.kind = RelationSpec::Kind::ActionDerived;
  } else {
    throw SyntaxError("unknown tag '" + tags + "'", p1 + 2);
  }
  spec.chain = parse_expr_chain(line.substr(p2 + 2));
  if (spec.kind != RelationSpec::Kind::Operator && spec.chain.size() != 1)
    throw SyntaxError("action entries take a single expression", p2 + 2);
  if (spec.kind == RelationSpec::Kind::Operator && spec.chain.size() < 2)
    throw SyntaxError("operator entries need at least one '='", p2 + 2);
  return spec;
}

std::string print_relation(const RelationSpec& spec) {
  std::string tags;
  switch (spec.kind) {
    case RelationSpec::Kind::Operator:
      tags = spec.in_variable && spec.in_degree ? "vd" : (spec.in_variable ? "v" : "d");
      break;
    case RelationSpec::Kind::Action:
      tags = "act";
      break;
    case RelationSpec::Kind::ActionDerived:
      tags = "actx";
      break;
  }
  std::string out = spec.id + " :: " + tags + " :: ";
  for (size_t i = 0; i < spec.chain.size(); ++i) {
    if (i) out += " = ";
    out += spec.chain[i].print();
  }
  return out;
}

}  // namespace trijac
