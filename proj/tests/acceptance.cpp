// Acceptance suite: every check is exact (zero tolerance); the two relation
// suites additionally carry wall-clock budgets. Prints one line per
// criterion and exits nonzero if any fails.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <vector>

#include "trijac/jacobi1.hpp"
#include "trijac/jacobi2.hpp"
#include "trijac/relation_suites.hpp"

using namespace trijac;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

bool all_pass(const std::vector<VerificationReport>& reports, std::string* why = nullptr) {
  for (const auto& r : reports)
    if (!r.pass) {
      if (why) *why = r.relation + ": " + r.witness;
      return false;
    }
  return true;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  const char* env = std::getenv("TRIJAC_CATALOGUE");
  Catalogue cat = Catalogue::load(env ? env : "data/relations.cat");
  Jacobi2 family;
  GeneratorTables tables = GeneratorTables::standard();

  // 1. Every catalogue relation, variable representation, symbolic, zero
  //    residual, under 60 seconds.
  {
    auto t0 = std::chrono::steady_clock::now();
    SampleConfig cfg;
    auto reports = verify_all(cat, Representation::Variable, Mode::Symbolic, tables, cfg);
    auto consequences = verify_jacobi_consequences(cat);
    double elapsed = seconds_since(t0);
    std::string why;
    bool ok = all_pass(reports, &why) && all_pass(consequences, &why);
    bool in_time = elapsed < 60.0;
    report("criterion-1 variable-representation relation suite",
           ok && in_time, ok ? "in " + std::to_string(elapsed) + "s" : why);
  }

  // 2. The same catalogue in the degree representation, sampled-exact with
  //    at least 50 accepted samples per relation, seeded, under 120 seconds.
  {
    auto t0 = std::chrono::steady_clock::now();
    SampleConfig cfg;
    cfg.seed = 42;
    cfg.min_samples = 50;
    auto reports = verify_all(cat, Representation::Degree, Mode::SampledExact, tables, cfg);
    double elapsed = seconds_since(t0);
    std::string why;
    bool ok = all_pass(reports, &why);
    bool in_time = elapsed < 120.0;
    report("criterion-2 degree-representation mirror (sampled-exact, seed 42)",
           ok && in_time, ok ? "in " + std::to_string(elapsed) + "s" : why);
  }

  // 3. Joint eigen-equations for all indices within 6, symbolic parameters.
  {
    std::string why;
    bool ok = all_pass(verify_eigen(6, family), &why);
    report("criterion-3 bispectral eigen-equations to index 6", ok, why);
  }

  // 4. Both recurrences for all indices within 6, boundary rows included
  //    under the vanishing out-of-cone convention.
  {
    VerificationReport r1 = verify_recurrence(Recurrence::MultByX, 6, family);
    VerificationReport r2 = verify_recurrence(Recurrence::MultByComplement, 6, family);
    bool ok = r1.pass && r2.pass;
    report("criterion-4 recurrences to index 6 with boundary rows", ok,
           ok ? "" : (r1.pass ? r2.witness : r1.witness));
  }

  // 5. Gram matrix to index 6: diagonal equals the Pochhammer closed form,
  //    off-diagonals vanish identically.
  {
    std::string why;
    bool ok = all_pass(verify_gram(6, family), &why);
    report("criterion-5 orthogonality and norms to index 6", ok, why);
  }

  // 6. Structure relations and the two derived combinations to index 5.
  {
    std::string why;
    bool ok = all_pass(verify_structure(cat, 5, family, tables), &why);
    report("criterion-6 structure relations to index 5", ok, why);
  }

  // 7. Univariate identity suite to degree 10 plus the quadratic-algebra
  //    realization as exact operator identities.
  {
    bool ok = true;
    std::string why;
    for (const auto& id : uni_identity_ids()) {
      VerificationReport r = uni_verify(id, 10);
      if (!r.pass) {
        ok = false;
        why = r.relation + ": " + r.witness;
      }
    }
    if (ok) ok = all_pass(rank1_verify(), &why);
    report("criterion-7 univariate suite to degree 10", ok, why);
  }

  // 8. Ladder actions to index 5, the factorizations and both sum forms as
  //    exact operator identities, and the three weight conjugations.
  {
    bool ok = true;
    std::string why;
    if (!all_pass(verify_sactions(5, family), &why)) ok = false;
    SampleConfig cfg;
    for (const char* id : {"factorization_L1_a", "factorization_L1_b", "factorization_L2_a",
                           "factorization_L2_b", "factorization_L3_a", "factorization_L3_b",
                           "ladder_sum_L_a", "ladder_sum_L_b"}) {
      const RelationSpec* spec = cat.find(id);
      if (!spec) {
        ok = false;
        why = std::string("missing catalogue entry ") + id;
        continue;
      }
      VerificationReport r = verify(*spec, Representation::Variable, Mode::Symbolic, tables, cfg);
      if (!r.pass) {
        ok = false;
        why = r.relation + ": " + r.witness;
      }
    }
    for (int i = 1; i <= 3 && ok; ++i)
      if (!conjugate_check(i)) {
        ok = false;
        why = "conjugation " + std::to_string(i);
      }
    report("criterion-8 ladder operator suite", ok, why);
  }

  // 9. The bracket-route diagonal generator agrees coefficientwise with its
  //    closed form.
  {
    VerificationReport r = verify_l3hat_consistency(tables);
    report("criterion-9 bracket route for the k-diagonal generator", r.pass, r.witness);
  }

  // 10. Ten pinned single-coefficient mutations each flip at least one check.
  {
    std::string why;
    bool ok = all_pass(mutation_controls(cat, family), &why);
    report("criterion-10 mutation controls", ok, why);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
