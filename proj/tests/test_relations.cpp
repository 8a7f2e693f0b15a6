#include <doctest.h>

#include <cstdlib>

#include "trijac/relation_engine.hpp"

using namespace trijac;
using namespace trijac::sym;

namespace {
const Catalogue& catalogue() {
  static Catalogue cat = [] {
    const char* env = std::getenv("TRIJAC_CATALOGUE");
    return Catalogue::load(env ? env : "data/relations.cat");
  }();
  return cat;
}
}  // namespace

TEST_CASE("expression parsing") {
  Expr e = parse_expr("[L, X1]");
  CHECK(e.kind == Expr::Kind::Bracket);
  CHECK(e.args[0].name == "L");

  auto chain = parse_expr_chain("[L, X1] = N1");
  REQUIRE(chain.size() == 2);
  CHECK(chain[1].kind == Expr::Kind::Gen);

  Expr xxl = parse_expr("(-2)*X1*X1 + (2)*X1");
  CHECK(xxl.kind == Expr::Kind::Sum);
  REQUIRE(xxl.args.size() == 2);
  CHECK(xxl.args[0].kind == Expr::Kind::Prod);

  CHECK_THROWS_AS(parse_expr("[L,[L,X1]"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("{L,"), SyntaxError);
  CHECK_THROWS_AS(parse_expr(""), SyntaxError);
}

TEST_CASE("scalar folding") {
  Expr e = parse_expr("((a+b+c+1)*(a+1))*X1");
  REQUIRE(e.kind == Expr::Kind::Prod);
  REQUIRE(e.args.size() == 2);
  CHECK(e.args[0].kind == Expr::Kind::Scalar);
  CHECK(e.args[0].scalar == (a() + b() + c() + 1) * (a() + 1));
  Expr only_scalars = parse_expr("(1/2) + a - a");
  CHECK(only_scalars.kind == Expr::Kind::Scalar);
  CHECK(only_scalars.scalar == ParamPoly(ExactScalar(1, 2)));
}

TEST_CASE("print and reparse is the identity") {
  for (const auto& spec : catalogue().entries) {
    RelationSpec again = parse_relation(print_relation(spec));
    CHECK(again.id == spec.id);
    CHECK(again.kind == spec.kind);
    REQUIRE(again.chain.size() == spec.chain.size());
    for (size_t i = 0; i < spec.chain.size(); ++i) CHECK(again.chain[i] == spec.chain[i]);
  }
}

TEST_CASE("relation line validation") {
  CHECK_THROWS_AS(parse_relation("no separators here"), SyntaxError);
  CHECK_THROWS_AS(parse_relation("id :: vq :: L = L"), SyntaxError);
  CHECK_THROWS_AS(parse_relation("id :: vd :: L"), SyntaxError);
  RelationSpec r = parse_relation("ok :: act :: N1 - M3");
  CHECK(r.kind == RelationSpec::Kind::Action);
}

TEST_CASE("catalogue loads and resolves") {
  const Catalogue& cat = catalogue();
  CHECK(!cat.sha256.empty());
  CHECK(cat.find("N1_X1") != nullptr);
  CHECK(cat.find("missing_entry") == nullptr);
  CHECK_THROWS_AS(Catalogue::load("/nonexistent/file.cat"), Error);
}

TEST_CASE("variable evaluation matches builtins") {
  GeneratorTables t = GeneratorTables::standard();
  CHECK(eval_variable(parse_expr("[L, X1]"), t) == builtin("N1"));
  CHECK(eval_variable(parse_expr("(-1)*M3 + N1 + N3"), t) == builtin("J1"));
  CHECK(eval_variable(parse_expr("(a+1)*I"), t) == DiffOp::scalar(a() + 1));
  CHECK(eval_variable(parse_expr("a + 1"), t) == DiffOp::scalar(a() + 1));
  CHECK_THROWS_AS(eval_variable(parse_expr("[L, Zq]"), t), UnknownGenerator);
}

TEST_CASE("degree evaluation uses the hatted catalogue") {
  GeneratorTables t = GeneratorTables::standard();
  CHECK(deq(eval_degree(parse_expr("[L, X1]"), t), dbuiltin("N1h")));
  CHECK(deq(eval_degree(parse_expr("L1"), t), dbuiltin("L1h")));
}

TEST_CASE("symbolic verification in the variable representation") {
  GeneratorTables t = GeneratorTables::standard();
  SampleConfig cfg;
  const RelationSpec* xxl = catalogue().find("N1_X1");
  REQUIRE(xxl);
  VerificationReport r = verify(*xxl, Representation::Variable, Mode::Symbolic, t, cfg);
  CHECK(r.pass);
  CHECK(r.witness.empty());

  // corrupt the right side: add 3*X1
  RelationSpec bad = *xxl;
  bad.chain[1] = Expr::sum({bad.chain[1], parse_expr("(3)*X1")});
  VerificationReport rb = verify(bad, Representation::Variable, Mode::Symbolic, t, cfg);
  CHECK_FALSE(rb.pass);
  CHECK(!rb.witness.empty());
}

TEST_CASE("sampled verification in the degree representation") {
  GeneratorTables t = GeneratorTables::standard();
  SampleConfig cfg;
  cfg.seed = 42;
  cfg.min_samples = 50;
  const RelationSpec* spec = catalogue().find("N1_X1");
  VerificationReport r = verify(*spec, Representation::Degree, Mode::SampledExact, t, cfg);
  CHECK(r.pass);
  CHECK(r.mode == "sampled-exact");

  RelationSpec bad = *spec;
  bad.chain[1] = Expr::sum({bad.chain[1], parse_expr("(3)*X1")});
  CHECK_FALSE(verify(bad, Representation::Degree, Mode::SampledExact, t, cfg).pass);
}

TEST_CASE("symbolic verification in the degree representation") {
  GeneratorTables t = GeneratorTables::standard();
  SampleConfig cfg;
  for (const char* id : {"comm_L_X1", "N1_X1", "N1_L1", "comm_L_L1"}) {
    const RelationSpec* spec = catalogue().find(id);
    REQUIRE(spec);
    CHECK(verify(*spec, Representation::Degree, Mode::Symbolic, t, cfg).pass);
  }
}

TEST_CASE("degree bound audit stays within the sampling budget") {
  GeneratorTables t = GeneratorTables::standard();
  for (const auto& spec : catalogue().entries) {
    if (spec.kind != RelationSpec::Kind::Operator || !spec.in_degree) continue;
    long bound = degree_bound(spec, t);
    INFO(spec.id, " bound ", bound);
    CHECK(bound >= 0);
    CHECK(bound <= 400);
  }
}

TEST_CASE("deterministic sampling") {
  SplitMix64 a1(9), a2(9);
  for (int i = 0; i < 100; ++i) CHECK(a1.next() == a2.next());
  CHECK(fnv1a("N1_X1") == fnv1a("N1_X1"));
  CHECK(fnv1a("N1_X1") != fnv1a("N1_X3"));
}

TEST_CASE("contraction data expressions parse") {
  for (const char* text :
       {"X3", "(-1)*L1 + ((1/4)*(b+c)*(b+c+2))*I", "(-1)*L3 + ((1/4)*(a+b)*(a+b+2))*I",
        "I - X1", "(-1)*L + ((1/4)*(a+b+c+3)*(a+b+c+1))*I", "0", "(1/4)*(c*c - 1)",
        "(1/4)*(b*b - 1)", "(1/4)*(a*a - 1)", "1"}) {
    CHECK_NOTHROW(parse_expr(text));
  }
}
