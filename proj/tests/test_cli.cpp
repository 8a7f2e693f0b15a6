// Integration checks of the command-line front end; the binary path arrives
// as the test argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 512> buf;
  while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("poly subcommand") {
  CHECK(run("poly 0 0").out == "1\n");
  CHECK(run("poly 1 1").out == "(b+1) - (b+1)*x - (b+c+2)*y\n");
  CHECK(run("poly 1 0").out == "(a+1) - (a+b+c+3)*x\n");
  CHECK(run("poly 1 2").status == 2);
}

TEST_CASE("gram subcommand") {
  RunResult r = run("gram 0");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"1\"") != std::string::npos);
  CHECK(run("gram -3").status == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --suite jacobi").status == 0);
  CHECK(run("verify --suite no_such_suite").status == 2);
  CHECK(run("--catalogue /missing.cat verify --suite jacobi").status == 2);
}

TEST_CASE("seeded reports are byte-identical across runs and thread counts") {
  std::string out1 = "/tmp/trijac_cli_r1.json", out2 = "/tmp/trijac_cli_r2.json";
  CHECK(run("verify --suite jacobi --seed 42 --out " + out1).status == 0);
  CHECK(run("verify --suite jacobi --seed 42 --threads 4 --out " + out2).status == 0);
  std::string d1 = slurp(out1), d2 = slurp(out2);
  CHECK(!d1.empty());
  CHECK(d1 == d2);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("config file with flag overrides") {
  std::string cfg = "/tmp/trijac_cli_cfg.txt";
  {
    std::ofstream f(cfg);
    f << "# defaults\nsuite=no_such_suite\nseed=7\n";
  }
  // flag wins over the config value
  CHECK(run("verify --config " + cfg + " --suite jacobi").status == 0);
  CHECK(run("verify --config " + cfg).status == 2);
  {
    std::ofstream f(cfg);
    f << "unknown_key=1\n";
  }
  CHECK(run("verify --config " + cfg + " --suite jacobi").status == 2);
  std::remove(cfg.c_str());
}

TEST_CASE("report carries provenance") {
  std::string out = "/tmp/trijac_cli_prov.json";
  REQUIRE(run("verify --suite l3hat --out " + out).status == 0);
  std::string doc = slurp(out);
  CHECK(doc.find("\"version\"") != std::string::npos);
  CHECK(doc.find("\"catalogue_sha256\"") != std::string::npos);
  CHECK(doc.find("\"seed\": 42") != std::string::npos);
  std::remove(out.c_str());
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
    return 2;
  }
  g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
