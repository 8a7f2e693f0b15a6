#include "trijac/capi.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trijac/jacobi1.hpp"
#include "trijac/jacobi2.hpp"
#include "trijac/relation_suites.hpp"
#include "trijac/report.hpp"

#ifndef TRIJAC_VERSION_STRING
#define TRIJAC_VERSION_STRING "v0.0.0"
#endif
#ifndef TRIJAC_DEFAULT_CATALOGUE
#define TRIJAC_DEFAULT_CATALOGUE "data/relations.cat"
#endif

using namespace trijac;

struct trijac_session {
  Catalogue catalogue;
  Jacobi2 family;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

trijac_status fail(trijac_session* s, const std::string& msg, trijac_status code) {
  if (s) s->last_error = msg;
  return code;
}

struct SuiteSelection {
  std::string name;
  int n_max = -1;
  Mode mode = Mode::SampledExact;
  bool rep_variable = true;
  bool rep_degree = true;
  SampleConfig samples;
  int threads = 1;
};

int defaulted(int n_max, int fallback) { return n_max >= 0 ? n_max : fallback; }

void run_suite(trijac_session* s, const SuiteSelection& sel,
               std::vector<VerificationReport>& out) {
  const Catalogue& cat = s->catalogue;
  const Jacobi2& family = s->family;
  GeneratorTables tables = GeneratorTables::standard();

  auto append = [&out](std::vector<VerificationReport> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };

  if (sel.name == "relations") {
    if (sel.rep_variable)
      append(verify_all(cat, Representation::Variable, Mode::Symbolic, tables, sel.samples,
                        sel.threads));
    if (sel.rep_degree)
      append(verify_all(cat, Representation::Degree, sel.mode, tables, sel.samples, sel.threads));
    return;
  }
  if (sel.name == "structure") {
    append(verify_structure(cat, defaulted(sel.n_max, 5), family, tables));
    return;
  }
  if (sel.name == "subalgebras") {
    append(verify_subalgebras(cat, family, defaulted(sel.n_max, 5)));
    return;
  }
  if (sel.name == "symmetry") {
    append(verify_symmetry(cat, sel.threads));
    return;
  }
  if (sel.name == "jacobi") {
    append(verify_jacobi_consequences(cat));
    return;
  }
  if (sel.name == "eigen") {
    append(verify_eigen(defaulted(sel.n_max, 6), family));
    return;
  }
  if (sel.name == "recurrence") {
    out.push_back(verify_recurrence(Recurrence::MultByX, defaulted(sel.n_max, 6), family));
    out.push_back(
        verify_recurrence(Recurrence::MultByComplement, defaulted(sel.n_max, 6), family));
    return;
  }
  if (sel.name == "gram") {
    append(verify_gram(defaulted(sel.n_max, 6), family));
    return;
  }
  if (sel.name == "univariate" || sel.name == "appendixA") {
    int nm = defaulted(sel.n_max, 10);
    for (const auto& id : uni_identity_ids()) out.push_back(uni_verify(id, nm));
    append(rank1_verify());
    return;
  }
  if (sel.name == "ladder" || sel.name == "appendixB") {
    int nm = defaulted(sel.n_max, 5);
    append(verify_sactions(nm, family));
    for (int i = 1; i <= 3; ++i) {
      VerificationReport r;
      r.relation = "conjugation_" + std::to_string(i);
      r.representation = "variable";
      r.mode = "symbolic";
      r.pass = conjugate_check(i);
      if (!r.pass) r.witness = "weight conjugation identity failed";
      out.push_back(r);
    }
    return;
  }
  if (sel.name == "l3hat") {
    out.push_back(verify_l3hat_consistency(tables));
    return;
  }
  if (sel.name == "mutations") {
    append(mutation_controls(cat, family));
    return;
  }
  if (sel.name == "all") {
    for (const char* sub : {"relations", "structure", "subalgebras", "symmetry", "eigen",
                            "recurrence", "gram", "univariate", "ladder", "l3hat", "mutations"}) {
      SuiteSelection child = sel;
      child.name = sub;
      run_suite(s, child, out);
    }
    return;
  }
  throw Error("unknown suite '" + sel.name + "'");
}

}  // namespace

extern "C" {

trijac_session* trijac_session_new(const char* catalogue_path) {
  std::string path;
  if (catalogue_path && *catalogue_path) {
    path = catalogue_path;
  } else if (const char* env = std::getenv("TRIJAC_CATALOGUE"); env && *env) {
    path = env;
  } else {
    path = TRIJAC_DEFAULT_CATALOGUE;
  }
  try {
    auto* s = new trijac_session;
    s->catalogue = Catalogue::load(path);
    return s;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void trijac_session_free(trijac_session* s) { delete s; }

const char* trijac_last_error(const trijac_session* s) {
  return s ? s->last_error.c_str() : "";
}

const char* trijac_version(void) { return TRIJAC_VERSION_STRING; }

void trijac_string_free(char* s) { std::free(s); }

trijac_status trijac_catalogue_hash(trijac_session* s, char** out_hex) {
  if (!s || !out_hex) return TRIJAC_USAGE;
  *out_hex = dup_string(s->catalogue.sha256);
  return TRIJAC_OK;
}

trijac_status trijac_poly(trijac_session* s, int n, int k, char** out_text) {
  if (!s || !out_text) return TRIJAC_USAGE;
  if (n < 0 || k < 0 || k > n)
    return fail(s, "indices must satisfy 0 <= k <= n", TRIJAC_USAGE);
  try {
    *out_text = dup_string(s->family.poly(n, k).to_text_grouped(Var::x, Var::y));
    return TRIJAC_OK;
  } catch (const std::exception& e) {
    return fail(s, e.what(), TRIJAC_ERROR);
  }
}

trijac_status trijac_gram_json(trijac_session* s, int n_max, char** out_json) {
  if (!s || !out_json) return TRIJAC_USAGE;
  if (n_max < 0) return fail(s, "n_max must be nonnegative", TRIJAC_USAGE);
  try {
    auto gram = gram_matrix(n_max, s->family);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : gram) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& entry : row) r.push_back(entry.to_text());
      rows.push_back(std::move(r));
    }
    *out_json = dup_string(rows.dump(1) + "\n");
    return TRIJAC_OK;
  } catch (const std::exception& e) {
    return fail(s, e.what(), TRIJAC_ERROR);
  }
}

void trijac_run_config_init(trijac_run_config* cfg) {
  if (!cfg) return;
  cfg->n_max = -1;
  cfg->mode = "sampled";
  cfg->samples = 64;
  cfg->seed = 42;
  cfg->representation = "both";
  cfg->suite = "all";
  cfg->with_timings = 0;
  cfg->threads = 1;
}

const char* trijac_suite_names(void) {
  return "all\nrelations\nstructure\nsubalgebras\nsymmetry\njacobi\neigen\nrecurrence\ngram\n"
         "univariate\nladder\nl3hat\nmutations";
}

trijac_status trijac_verify(trijac_session* s, const trijac_run_config* cfg,
                            const char* out_path, int* out_failures) {
  if (!s || !cfg) return TRIJAC_USAGE;
  SuiteSelection sel;
  sel.name = cfg->suite ? cfg->suite : "all";
  sel.n_max = cfg->n_max;
  std::string mode = cfg->mode ? cfg->mode : "sampled";
  if (mode == "symbolic")
    sel.mode = Mode::Symbolic;
  else if (mode == "sampled" || mode == "sampled-exact")
    sel.mode = Mode::SampledExact;
  else
    return fail(s, "mode must be 'symbolic' or 'sampled'", TRIJAC_USAGE);
  std::string rep = cfg->representation ? cfg->representation : "both";
  if (rep == "variable") {
    sel.rep_degree = false;
  } else if (rep == "degree") {
    sel.rep_variable = false;
  } else if (rep != "both") {
    return fail(s, "representation must be 'variable', 'degree' or 'both'", TRIJAC_USAGE);
  }
  if (cfg->samples < 1) return fail(s, "samples must be >= 1", TRIJAC_USAGE);
  sel.samples.min_samples = cfg->samples;
  sel.samples.seed = cfg->seed;
  sel.threads = cfg->threads;

  std::vector<VerificationReport> reports;
  try {
    run_suite(s, sel, reports);
  } catch (const std::exception& e) {
    return fail(s, e.what(), TRIJAC_USAGE);
  }
  ReportSummary summary = summarize(reports);
  if (out_failures) *out_failures = summary.failed;
  if (out_path && *out_path) {
    try {
      write_file_atomic(out_path,
                        reports_to_json(reports, TRIJAC_VERSION_STRING, s->catalogue.sha256,
                                        cfg->seed, cfg->with_timings != 0));
    } catch (const std::exception& e) {
      return fail(s, e.what(), TRIJAC_USAGE);
    }
  }
  return summary.failed == 0 ? TRIJAC_OK : TRIJAC_VERIFY_FAILED;
}

}  // extern "C"
