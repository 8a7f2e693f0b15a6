// Command-line front end: generate polynomials, run verification suites,
// emit Gram matrices and JSON reports. Talks to the core through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "trijac/capi.h"

namespace {

struct SessionDeleter {
  void operator()(trijac_session* s) const { trijac_session_free(s); }
};
using Session = std::unique_ptr<trijac_session, SessionDeleter>;

struct StringDeleter {
  void operator()(char* s) const { trijac_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// key=value file; unknown keys rejected so typos surface.
int load_config_file(const std::string& path, std::map<std::string, std::string>& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open config file " << path << "\n";
    return 2;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: " << path << ":" << lineno << ": expected key=value\n";
      return 2;
    }
    auto trim = [](std::string t) {
      size_t s = t.find_first_not_of(" \t\r");
      size_t e = t.find_last_not_of(" \t\r");
      return s == std::string::npos ? std::string() : t.substr(s, e - s + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    static const char* known[] = {"nmax", "mode",      "samples", "seed",
                                  "rep",  "suite",     "out",     "catalogue",
                                  "timings", "threads"};
    bool ok = false;
    for (const char* k : known) ok |= key == k;
    if (!ok) {
      std::cerr << "error: " << path << ":" << lineno << ": unknown key '" << key << "'\n";
      return 2;
    }
    out[key] = value;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suite for the bispectral algebra of the "
               "two-variable Jacobi polynomials on the triangle"};
  app.set_version_flag("--version", trijac_version());
  app.require_subcommand(1);

  std::string catalogue;
  app.add_option("--catalogue", catalogue, "Relation catalogue file")
      ->envname("TRIJAC_CATALOGUE");

  // poly n k
  auto* poly_cmd = app.add_subcommand("poly", "Print J_{n,k} in exact text form");
  int poly_n = 0, poly_k = 0;
  poly_cmd->add_option("n", poly_n, "first index")->required();
  poly_cmd->add_option("k", poly_k, "second index")->required();

  // gram n_max
  auto* gram_cmd = app.add_subcommand("gram", "Print the Gram matrix as JSON");
  int gram_nmax = 0;
  gram_cmd->add_option("n_max", gram_nmax, "index bound")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::string config_path, mode, rep, suite, out_path;
  int nmax = -2;
  int samples = -1;
  int threads = -1;
  unsigned long long seed = static_cast<unsigned long long>(-1);
  bool timings = false;
  verify_cmd->add_option("--config", config_path, "key=value config file");
  verify_cmd->add_option("--nmax", nmax, "index bound for action suites");
  verify_cmd->add_option("--mode", mode, "symbolic | sampled");
  verify_cmd->add_option("--samples", samples, "minimum accepted samples per relation");
  verify_cmd->add_option("--seed", seed, "sample seed");
  verify_cmd->add_option("--rep", rep, "variable | degree | both");
  verify_cmd->add_option("--suite", suite, std::string("suite to run, one of: ") +
                                               [] {
                                                 std::string names = trijac_suite_names();
                                                 for (auto& ch : names)
                                                   if (ch == '\n') ch = ' ';
                                                 return names;
                                               }());
  verify_cmd->add_option("--out", out_path, "JSON report path");
  verify_cmd->add_flag("--timings", timings, "emit real timings (breaks byte reproducibility)");
  verify_cmd->add_option("--threads", threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  Session session(trijac_session_new(catalogue.empty() ? nullptr : catalogue.c_str()));
  if (!session) {
    std::cerr << "error: cannot load relation catalogue"
              << (catalogue.empty() ? "" : " from " + catalogue) << "\n";
    return 2;
  }

  if (poly_cmd->parsed()) {
    char* text = nullptr;
    trijac_status st = trijac_poly(session.get(), poly_n, poly_k, &text);
    if (st != TRIJAC_OK) {
      std::cerr << "error: " << trijac_last_error(session.get()) << "\n";
      return 2;
    }
    OwnedString owned(text);
    std::cout << owned.get() << "\n";
    return 0;
  }

  if (gram_cmd->parsed()) {
    char* json = nullptr;
    trijac_status st = trijac_gram_json(session.get(), gram_nmax, &json);
    if (st != TRIJAC_OK) {
      std::cerr << "error: " << trijac_last_error(session.get()) << "\n";
      return 2;
    }
    OwnedString owned(json);
    std::cout << owned.get();
    return 0;
  }

  // verify: config file first, CLI flags override.
  std::map<std::string, std::string> file_cfg;
  if (!config_path.empty()) {
    int rc = load_config_file(config_path, file_cfg);
    if (rc) return rc;
  }
  auto pick = [&](const std::string& key, const std::string& flag_value,
                  bool flag_set) -> std::string {
    if (flag_set) return flag_value;
    auto it = file_cfg.find(key);
    return it == file_cfg.end() ? std::string() : it->second;
  };

  trijac_run_config cfg;
  trijac_run_config_init(&cfg);
  std::string mode_v = pick("mode", mode, !mode.empty());
  std::string rep_v = pick("rep", rep, !rep.empty());
  std::string suite_v = pick("suite", suite, !suite.empty());
  std::string out_v = pick("out", out_path, !out_path.empty());
  if (!mode_v.empty()) cfg.mode = mode_v.c_str();
  if (!rep_v.empty()) cfg.representation = rep_v.c_str();
  if (!suite_v.empty()) cfg.suite = suite_v.c_str();
  try {
    if (nmax != -2)
      cfg.n_max = nmax;
    else if (file_cfg.count("nmax"))
      cfg.n_max = std::stoi(file_cfg.at("nmax"));
    if (samples >= 0)
      cfg.samples = samples;
    else if (file_cfg.count("samples"))
      cfg.samples = std::stoi(file_cfg.at("samples"));
    if (seed != static_cast<unsigned long long>(-1))
      cfg.seed = seed;
    else if (file_cfg.count("seed"))
      cfg.seed = std::stoull(file_cfg.at("seed"));
    if (threads >= 0)
      cfg.threads = threads;
    else if (file_cfg.count("threads"))
      cfg.threads = std::stoi(file_cfg.at("threads"));
    if (timings)
      cfg.with_timings = 1;
    else if (file_cfg.count("timings"))
      cfg.with_timings = file_cfg.at("timings") == "1" || file_cfg.at("timings") == "true";
  } catch (const std::exception&) {
    std::cerr << "error: malformed numeric value in config\n";
    return 2;
  }

  int failures = 0;
  trijac_status st =
      trijac_verify(session.get(), &cfg, out_v.empty() ? nullptr : out_v.c_str(), &failures);
  if (st == TRIJAC_USAGE || st == TRIJAC_ERROR) {
    std::cerr << "error: " << trijac_last_error(session.get()) << "\n";
    return 2;
  }
  if (failures == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failures << " check(s) failed\n";
  return 1;
}
