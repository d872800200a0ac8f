// End-to-end tests of the command line binary. Each case spawns the real
// executable (path injected by the build) and inspects exit status and output
// files written to the build tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CLI_BINARY_PATH
#error "CLI_BINARY_PATH must be defined by the build"
#endif

namespace {

using nlohmann::json;

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + CLI_BINARY_PATH + "\" " + args +
                          " > cli_stdout.txt 2> cli_stderr.txt";
  const int rc = std::system(cmd.c_str());
#ifdef _WIN32
  return rc;
#else
  return WEXITSTATUS(rc);
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("spectrum command emits a parseable report") {
  REQUIRE(run("spectrum --family A --count 3 --out spec_a.json") == 0);
  const auto j = json::parse(slurp("spec_a.json"));
  CHECK(j["command"] == "spectrum");
  CHECK(j["input"]["family"] == "A");
  REQUIRE(j["spectrum"]["states"].size() == 3);
  const double pi = 3.14159265358979323846;
  for (int n = 1; n <= 3; ++n) {
    CHECK(j["spectrum"]["states"][n - 1]["energy"].get<double>() ==
          doctest::Approx(n * n * pi * pi).epsilon(1e-10));
  }
  // oracle block is attached with one row per emitted state
  REQUIRE(j["oracle"]["rows"].size() == 3);
  for (const auto& row : j["oracle"]["rows"])
    CHECK(row["rel_diff"].get<double>() < 1e-4);
}

TEST_CASE("spectrum output is byte-identical across runs") {
  REQUIRE(run("spectrum --family E --count 4 --out spec_e1.json") == 0);
  REQUIRE(run("spectrum --family E --count 4 --out spec_e2.json") == 0);
  const auto a = slurp("spec_e1.json");
  CHECK(!a.empty());
  CHECK(a == slurp("spec_e2.json"));
}

TEST_CASE("custom conditions work without a family tag") {
  REQUIRE(run("spectrum --custom \"1,0:1,0\" --count 2 --out spec_c.json") == 0);
  const auto j = json::parse(slurp("spec_c.json"));
  CHECK_FALSE(j["input"].contains("family"));
  CHECK(j["spectrum"]["states"].size() == 2);
  CHECK(j["paper_audit"].empty());
}

TEST_CASE("negscan agrees with its oracle for the balanced Robin family") {
  REQUIRE(run("negscan --family E --out scan_e.json") == 0);
  const auto j = json::parse(slurp("scan_e.json"));
  CHECK(j["negative_scan"]["verdict"] == "bound-states-found");
  REQUIRE(j["negative_scan"]["roots"].size() == 1);
  CHECK(j["negative_scan"]["roots"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(j["oracle"]["negative_count"] == 1);
}

TEST_CASE("negscan on an attractive custom wall") {
  REQUIRE(run("negscan --custom \"2,1:1,0\" --out scan_r.json") == 0);
  const auto j = json::parse(slurp("scan_r.json"));
  REQUIRE(j["negative_scan"]["roots"].size() == 1);
  CHECK(j["negative_scan"]["roots"][0].get<double>() ==
        doctest::Approx(1.9150080481545375).epsilon(1e-10));
}

TEST_CASE("angle form selects the condition") {
  REQUIRE(run("negscan --theta0 1.5707963267948966 --thetaL 1.5707963267948966 "
              "--out scan_n.json") == 0);
  const auto j = json::parse(slurp("scan_n.json"));
  CHECK(j["negative_scan"]["verdict"] == "eliminated");
}

TEST_CASE("hermiticity command reports the two deviations") {
  REQUIRE(run("hermiticity --family D --count 5 --out herm_d.json") == 0);
  const auto j = json::parse(slurp("herm_d.json"));
  CHECK(j["hermiticity"]["pair_count"] == 15);
  CHECK(j["hermiticity"]["max_boundary_term"].get<double>() < 1e-12);
  CHECK(j["hermiticity"]["gram_deviation"].get<double>() < 1e-10);
}

TEST_CASE("sweep writes CSV") {
  REQUIRE(run("sweep --grid 6 --out sweep6.csv") == 0);
  const auto text = slurp("sweep6.csv");
  CHECK(text.rfind("theta0,thetaL,negative_count,zero_mode,ground_energy\n", 0) == 0);
  int lines = 0;
  for (char ch : text) lines += (ch == '\n') ? 1 : 0;
  CHECK(lines == 37);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("spectrum --count 3") == 2);                       // no condition
  CHECK(run("spectrum --family A --custom \"1,0:1,0\"") == 2);  // two routes
  CHECK(run("spectrum --family Z --count 1") == 2);             // unknown letter
  CHECK(run("spectrum --custom \"nonsense\" --count 1") == 2);  // parse failure
  CHECK(run("spectrum --family A --count 0") == 2);             // rejected flag value
  CHECK(run("negscan --theta0 1.0") == 2);                      // missing partner
  CHECK(run("frobnicate") == 2);                                // unknown subcommand
  CHECK(run("") == 2);                                          // no subcommand
}

TEST_CASE("inhomogeneous data is rejected for eigenvalue commands") {
  CHECK(run("spectrum --custom \"1,0:1,0=1:0\" --count 2") == 2);
  CHECK(run("negscan --custom \"1,1:1,1=0:2\"") == 2);
  CHECK(run("hermiticity --custom \"1,0:0,1=1:1\"") == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help") == 0);
  CHECK(run("spectrum --help") == 0);
}

TEST_CASE("validate passes on the audited-clean families") {
  REQUIRE(run("validate --families A,C --out val_ac.json") == 0);
  const auto j = json::parse(slurp("val_ac.json"));
  CHECK(j["input"]["families"] == "A,C");
  CHECK(j["paper_audit"].empty());
  REQUIRE(j["checks"].size() > 0);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("strict mode fails when the audit finds published-formula errors") {
  // every check passes, so without the flag this is exit 0 ...
  REQUIRE(run("validate --families E --out val_e.json") == 0);
  auto j = json::parse(slurp("val_e.json"));
  CHECK(j["paper_audit"].size() == 4);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
  // ... and with it the findings turn into a failure
  CHECK(run("validate --families E --strict-paper --out val_es.json") == 4);
  j = json::parse(slurp("val_es.json"));
  CHECK(j["input"]["strict_paper"] == true);
  CHECK(j["paper_audit"].size() == 4);
}

TEST_CASE("validate rejects unknown family letters") {
  CHECK(run("validate --families A,Q") == 2);
  CHECK(run("validate --families \"\"") == 2);
}
