#include <doctest.h>

#include <cstdlib>

#include "trijac/relation_suites.hpp"

using namespace trijac;

namespace {
const Catalogue& catalogue() {
  static Catalogue cat = [] {
    const char* env = std::getenv("TRIJAC_CATALOGUE");
    return Catalogue::load(env ? env : "data/relations.cat");
  }();
  return cat;
}
const Jacobi2& family() {
  static Jacobi2 f;
  return f;
}
}  // namespace

TEST_CASE("catalogue manifest counts are pinned") {
  CatalogueManifest m = catalogue_manifest(catalogue());
  CHECK(m.operator_both == 41);
  CHECK(m.operator_variable_only == 10);
  CHECK(m.action == 3);
  CHECK(m.action_derived == 2);
  CHECK(catalogue().entries.size() == 56);
}

TEST_CASE("variable representation, full catalogue, symbolic") {
  GeneratorTables t = GeneratorTables::standard();
  SampleConfig cfg;
  auto reports = verify_all(catalogue(), Representation::Variable, Mode::Symbolic, t, cfg);
  CHECK(reports.size() == 51);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("degree representation, full catalogue, sampled-exact") {
  GeneratorTables t = GeneratorTables::standard();
  SampleConfig cfg;
  cfg.seed = 42;
  cfg.min_samples = 50;
  auto reports = verify_all(catalogue(), Representation::Degree, Mode::SampledExact, t, cfg);
  CHECK(reports.size() == 41);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("parallel and serial runs agree") {
  GeneratorTables t = GeneratorTables::standard();
  SampleConfig cfg;
  cfg.min_samples = 8;
  auto serial = verify_all(catalogue(), Representation::Variable, Mode::Symbolic, t, cfg, 1);
  auto parallel = verify_all(catalogue(), Representation::Variable, Mode::Symbolic, t, cfg, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].relation == parallel[i].relation);
    CHECK(serial[i].pass == parallel[i].pass);
    CHECK(serial[i].witness == parallel[i].witness);
  }
}

TEST_CASE("structure relations and derived combinations") {
  GeneratorTables t = GeneratorTables::standard();
  auto reports = verify_structure(catalogue(), 4, family(), t);
  CHECK(reports.size() == 5);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("structure relation base case") {
  // the first ladder action on the constant: both routes give
  // (a+1) - (a+b+c+3)x
  GeneratorTables t = GeneratorTables::standard();
  DiffOp n1 = eval_variable(parse_expr("N1"), t);
  ParamPoly lhs = apply(n1, ParamPoly(1));
  RationalPoly rhs = dapply(dbuiltin("N1h"), 0, 0, family());
  using namespace trijac::sym;
  ParamPoly expect = (a() + 1) - (a() + b() + c() + 3) * x();
  CHECK(lhs == expect);
  CHECK((rhs.num - expect * rhs.den).is_zero());
}

TEST_CASE("subalgebra suite") {
  auto reports = verify_subalgebras(catalogue(), family(), 5);
  CHECK(reports.size() == 10);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("alpha identification expands as stated") {
  using namespace trijac::sym;
  ParamPoly lhs = (b() + c()) * (b() + 1) + (b() - c()) * (a() + 1);
  ParamPoly rhs = (a() + b()) * (b() + 1) + (b() - a()) * (c() + 1);
  CHECK(lhs == rhs);
  ParamPoly expect = b() * b() + 2 * b() + a() * b() + b() * c() - a() * c();
  CHECK(lhs == expect);
}

TEST_CASE("index-pair symmetry") {
  auto reports = verify_symmetry(catalogue());
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("Jacobi-identity consequences") {
  auto reports = verify_jacobi_consequences(catalogue());
  CHECK(reports.size() == 7);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("bracket-route diagonal generator matches its closed form") {
  VerificationReport r = verify_l3hat_consistency(GeneratorTables::standard());
  INFO(r.witness);
  CHECK(r.pass);
}

TEST_CASE("mutation controls all detect") {
  auto reports = mutation_controls(catalogue(), family());
  CHECK(reports.size() == 10);
  for (const auto& r : reports) {
    INFO(r.relation, ": ", r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("zeroing one degree generator breaks its mirrors") {
  GeneratorTables t = GeneratorTables::with_degree_override("M3h", DegreeOp{});
  SampleConfig cfg;
  cfg.min_samples = 6;
  int failures = 0;
  for (const char* id : {"M3_X3", "M3_L", "M3_L1"}) {
    const RelationSpec* spec = catalogue().find(id);
    REQUIRE(spec);
    failures += !verify(*spec, Representation::Degree, Mode::SampledExact, t, cfg).pass;
  }
  CHECK(failures == 3);
}
