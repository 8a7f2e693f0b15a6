// Verification suites over the relation catalogue: full catalogue runs in
// either representation, structure-relation actions, subalgebra checks,
// index-pair symmetry, and the mutation controls guarding against vacuous
// passes.
#pragma once

#include "trijac/jacobi2.hpp"
#include "trijac/relation_engine.hpp"

namespace trijac {

// Runs every operator entry enabled for `rep`; deterministic order by
// catalogue position regardless of thread count.
std::vector<VerificationReport> verify_all(const Catalogue& cat, Representation rep, Mode mode,
                                           const GeneratorTables& tables,
                                           const SampleConfig& cfg, int threads = 1);

// Structure relations: differential action of each `act`/`actx` entry on
// J_{n,k} equals the difference action, boundaries included.
std::vector<VerificationReport> verify_structure(const Catalogue& cat, int n_max,
                                                 const Jacobi2& family,
                                                 const GeneratorTables& tables);

// Centralizer pairs, the four rank-one quadratic-subalgebra identifications,
// the two degenerate contractions, and the two-generator quadratic-algebra
// parameter extraction with the alpha identification.
std::vector<VerificationReport> verify_subalgebras(const Catalogue& cat, const Jacobi2& family,
                                                   int n_max = 5);

// Catalogue relations under the index-pair relabelings (1,3), (1,2), (2,3).
std::vector<VerificationReport> verify_symmetry(const Catalogue& cat, int threads = 1);

// The consequences of the Jacobi identity (catalogue ids jacobi_id_*).
std::vector<VerificationReport> verify_jacobi_consequences(const Catalogue& cat);

// The k-shift diagonal generator rebuilt from the bracket route must agree
// coefficientwise with its closed form.
VerificationReport verify_l3hat_consistency(const GeneratorTables& tables);

// Ten pinned single-coefficient mutations; each must flip at least one check.
std::vector<VerificationReport> mutation_controls(const Catalogue& cat, const Jacobi2& family);

// Pinned entry counts per kind/tags, catching silent catalogue drops.
struct CatalogueManifest {
  int operator_both = 0;
  int operator_variable_only = 0;
  int action = 0;
  int action_derived = 0;
};
CatalogueManifest catalogue_manifest(const Catalogue& cat);

void parallel_for(size_t count, const std::function<void(size_t)>& fn, int threads);

}  // namespace trijac
