#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "trijac/capi.h"

namespace {
trijac_session* open_session() { return trijac_session_new(nullptr); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

TEST_CASE("session lifecycle") {
  trijac_session* s = open_session();
  REQUIRE(s);
  char* hash = nullptr;
  CHECK(trijac_catalogue_hash(s, &hash) == TRIJAC_OK);
  CHECK(std::string(hash).size() == 64);
  trijac_string_free(hash);
  trijac_session_free(s);
  CHECK(trijac_session_new("/no/such/catalogue") == nullptr);
}

TEST_CASE("version string") {
  std::string v = trijac_version();
  CHECK(!v.empty());
}

TEST_CASE("polynomial text") {
  trijac_session* s = open_session();
  REQUIRE(s);
  char* text = nullptr;
  REQUIRE(trijac_poly(s, 0, 0, &text) == TRIJAC_OK);
  CHECK(std::string(text) == "1");
  trijac_string_free(text);
  REQUIRE(trijac_poly(s, 1, 1, &text) == TRIJAC_OK);
  CHECK(std::string(text) == "(b+1) - (b+1)*x - (b+c+2)*y");
  trijac_string_free(text);
  CHECK(trijac_poly(s, 1, 2, &text) == TRIJAC_USAGE);
  CHECK(trijac_poly(s, -1, 0, &text) == TRIJAC_USAGE);
  trijac_session_free(s);
}

TEST_CASE("gram json") {
  trijac_session* s = open_session();
  REQUIRE(s);
  char* json = nullptr;
  REQUIRE(trijac_gram_json(s, 0, &json) == TRIJAC_OK);
  std::string g = json;
  trijac_string_free(json);
  CHECK(g.find("\"1\"") != std::string::npos);
  CHECK(trijac_gram_json(s, -1, &json) == TRIJAC_USAGE);
  trijac_session_free(s);
}

TEST_CASE("verify runs a small suite and writes a report") {
  trijac_session* s = open_session();
  REQUIRE(s);
  trijac_run_config cfg;
  trijac_run_config_init(&cfg);
  cfg.suite = "jacobi";
  std::string out = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/trijac_capi_report.json";
  int failures = -1;
  CHECK(trijac_verify(s, &cfg, out.c_str(), &failures) == TRIJAC_OK);
  CHECK(failures == 0);
  std::string doc = slurp(out);
  CHECK(doc.find("\"relation\": \"jacobi_id_1\"") != std::string::npos);
  CHECK(doc.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(doc.find("\"catalogue_sha256\"") != std::string::npos);
  std::remove(out.c_str());

  cfg.suite = "unknown-suite";
  CHECK(trijac_verify(s, &cfg, nullptr, &failures) == TRIJAC_USAGE);
  CHECK(std::string(trijac_last_error(s)).find("unknown suite") != std::string::npos);
  cfg.suite = "jacobi";
  cfg.mode = "bogus";
  CHECK(trijac_verify(s, &cfg, nullptr, &failures) == TRIJAC_USAGE);
  trijac_session_free(s);
}

TEST_CASE("suite names are advertised") {
  std::string names = trijac_suite_names();
  for (const char* expect : {"relations", "structure", "gram", "univariate", "mutations"})
    CHECK(names.find(expect) != std::string::npos);
}
