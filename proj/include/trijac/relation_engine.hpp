// Realizes relation expressions in the variable (differential) and degree
// (difference) representations and certifies them symbolically or on
// deterministic exact rational samples.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "trijac/relation_expr.hpp"
#include "trijac/report.hpp"
#include "trijac/shiftalg.hpp"
#include "trijac/weyl.hpp"

namespace trijac {

struct DegenerateSampleBudgetExceeded : Error {
  using Error::Error;
};

// Name resolution plus the scalar relabeling hook used by the index-pair
// symmetry suite.
struct GeneratorTables {
  std::function<DiffOp(const std::string&)> variable;
  std::function<DegreeOp(const std::string&)> degree;
  std::function<ParamPoly(const ParamPoly&)> scalar = [](const ParamPoly& p) { return p; };

  static GeneratorTables standard();
  // Standard tables with one differential generator replaced.
  static GeneratorTables with_variable_mutation(const DiffOpMutation& mut);
  static GeneratorTables with_degree_mutation(const DegreeOpMutation& mut);
  static GeneratorTables with_degree_override(const std::string& name, DegreeOp op);
  // Generators relabeled to the index pair (i,j) of {1,2,3}; derived
  // generators become the corresponding commutators and the parameters
  // follow the relabeling.
  static GeneratorTables index_pair(int i, int j);
};

DiffOp eval_variable(const Expr& e, const GeneratorTables& t);
DegreeOp eval_degree(const Expr& e, const GeneratorTables& t);

struct SampleConfig {
  uint64_t seed = 42;
  int min_samples = 64;
};

enum class Mode { Symbolic, SampledExact };
enum class Representation { Variable, Degree };

// Conservative bound on the total degree of the cross-multiplied numerator
// of LHS-RHS for a chain evaluated in the degree representation; the sampled
// verifier draws more points than this bound on a line, which certifies the
// identity along that line.
long degree_bound(const RelationSpec& spec, const GeneratorTables& t);

VerificationReport verify(const RelationSpec& spec, Representation rep, Mode mode,
                          const GeneratorTables& tables, const SampleConfig& cfg);

// Catalogue of relations loaded from the plain-text data file.
struct Catalogue {
  std::vector<RelationSpec> entries;
  std::string sha256;

  static Catalogue load(const std::string& path);
  const RelationSpec* find(const std::string& id) const;
  int count(RelationSpec::Kind kind) const;
};

// Deterministic splittable generator for sample points.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // Uniform in [lo, hi].
  long range(long lo, long hi);
};

uint64_t fnv1a(const std::string& s);

}  // namespace trijac
