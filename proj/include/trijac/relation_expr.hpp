// Expression trees over named generators with commutator, anticommutator,
// product, sum and scalar coefficients in a, b, c; plus the parser for the
// relation catalogue grammar.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trijac/exact.hpp"

namespace trijac {

// Canonical form: sums and products are flattened, scalar factors of a
// product are folded into one leading scalar, scalar summands into one.
struct Expr {
  enum class Kind { Scalar, Gen, Sum, Prod, Bracket, Brace };
  Kind kind = Kind::Scalar;
  ParamPoly scalar;        // Kind::Scalar
  std::string name;        // Kind::Gen
  std::vector<Expr> args;  // children

  static Expr scalar_of(ParamPoly p) {
    Expr e;
    e.kind = Kind::Scalar;
    e.scalar = std::move(p);
    return e;
  }
  static Expr gen(std::string n) {
    Expr e;
    e.kind = Kind::Gen;
    e.name = std::move(n);
    return e;
  }
  static Expr sum(std::vector<Expr> children);
  static Expr prod(std::vector<Expr> children);
  static Expr bracket(Expr l, Expr r);
  static Expr brace(Expr l, Expr r);

  bool operator==(const Expr& o) const;
  std::string print() const;
  // Generator names appearing anywhere in the tree.
  void collect_generators(std::vector<std::string>& out) const;
};

// One catalogue entry: a chain e0 = e1 = ... (operator relations) or a
// single expression (action entries, compared across representations).
struct RelationSpec {
  enum class Kind { Operator, Action, ActionDerived };
  std::string id;
  Kind kind = Kind::Operator;
  bool in_variable = true;
  bool in_degree = true;
  std::vector<Expr> chain;
};

// Parses "expr (= expr)*"; used for catalogue lines and ad-hoc relations.
std::vector<Expr> parse_expr_chain(const std::string& text);
Expr parse_expr(const std::string& text);

// Parses a full catalogue line "id :: tags :: chain" (without comments).
RelationSpec parse_relation(const std::string& line);

std::string print_relation(const RelationSpec& spec);

}  // namespace trijac
