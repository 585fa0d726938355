#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// End-to-end checks of the installed command surface: exit-code contract,
// reproducible generation, and validate-replayability of emitted artifacts.

namespace {

int run(const std::string& args, const std::string& out = "/dev/null",
        const std::string& err = "/dev/null") {
  std::string cmd = std::string(HK4_CLI_PATH) + " " + args + " >" + out +
                    " 2>" + err;
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: extremal generation and oracle factor exit codes") {
  CHECK(run("gen extremal --n 8 --r 4 --t 1/2 -o /tmp/hk4cli_ext.hwg") == 0);
  CHECK(run("oracle factor -g /tmp/hk4cli_ext.hwg -o /tmp/hk4cli_oracle.json",
            "/dev/null", "/tmp/hk4cli_err.txt") == 1);
  CHECK(slurp("/tmp/hk4cli_err.txt").find("no heavy K4-factor") !=
        std::string::npos);
  CHECK(slurp("/tmp/hk4cli_oracle.json").find("\"answer\": false") !=
        std::string::npos);

  CHECK(run("gen random --n 8 --t 1/2 --seed 3 -o /tmp/hk4cli_r.hwg") == 0);
  CHECK(run("oracle maxtile -g /tmp/hk4cli_r.hwg") == 0);
}

TEST_CASE("cli: random generation is reproducible per seed") {
  CHECK(run("gen random --n 12 --t 1/2 --seed 7 -o /tmp/hk4cli_a.hwg") == 0);
  CHECK(run("gen random --n 12 --t 1/2 --seed 7 -o /tmp/hk4cli_b.hwg") == 0);
  CHECK(slurp("/tmp/hk4cli_a.hwg") == slurp("/tmp/hk4cli_b.hwg"));
  CHECK(run("gen random --n 12 --t 1/2 --seed 8 -o /tmp/hk4cli_c.hwg") == 0);
  CHECK(slurp("/tmp/hk4cli_a.hwg") != slurp("/tmp/hk4cli_c.hwg"));
}

TEST_CASE("cli: json mirror round trip") {
  CHECK(run("gen extremal --n 8 --r 4 --t 1/2 --format json -o /tmp/hk4cli_g.json") == 0);
  CHECK(run("degree -g /tmp/hk4cli_g.json -o /tmp/hk4cli_deg.json") == 0);
  CHECK(slurp("/tmp/hk4cli_deg.json").find("\"min\": \"4\"") != std::string::npos);
}

TEST_CASE("cli: tiling report replays through validate") {
  CHECK(run("gen random --n 16 --t 1/2 --seed 5 -o /tmp/hk4cli_t.hwg") == 0);
  CHECK(run("tile -g /tmp/hk4cli_t.hwg --mu 1/10 -o /tmp/hk4cli_tile.json") == 0);
  CHECK(run("validate -g /tmp/hk4cli_t.hwg -i /tmp/hk4cli_tile.json") == 0);

  // Tamper: shift rho by one grid step.
  std::string body = slurp("/tmp/hk4cli_tile.json");
  auto pos = body.find("\"rho_num\": ");
  REQUIRE(pos != std::string::npos);
  body.insert(pos + 11, "1");  // prefix a digit, changing the value
  std::ofstream("/tmp/hk4cli_tile_bad.json") << body;
  CHECK(run("validate -g /tmp/hk4cli_t.hwg -i /tmp/hk4cli_tile_bad.json",
            "/dev/null", "/tmp/hk4cli_err2.txt") == 1);
  CHECK(slurp("/tmp/hk4cli_err2.txt").find("violation") != std::string::npos);
}

TEST_CASE("cli: certificates replay through validate") {
  CHECK(run("gen random --n 20 --t 1/2 --seed 2 -o /tmp/hk4cli_c20.hwg") == 0);
  int rc = run("reach certify -g /tmp/hk4cli_c20.hwg --u 0 --v 1 --m 1 -o /tmp/hk4cli_cert.json");
  if (rc == 0)
    CHECK(run("validate -g /tmp/hk4cli_c20.hwg -i /tmp/hk4cli_cert.json") == 0);
  else
    CHECK(rc == 1);  // inconclusive is a domain failure, not a crash

  CHECK(run("gen extremal --n 100 --r 4 --t 1/2 -o /tmp/hk4cli_ones.hwg") == 0);
  CHECK(run("reach two-from-three -g /tmp/hk4cli_ones.hwg --v1 0 --v2 1 --v3 2 "
            "-o /tmp/hk4cli_tft.json") == 0);
  CHECK(run("validate -g /tmp/hk4cli_ones.hwg -i /tmp/hk4cli_tft.json") == 0);
}

TEST_CASE("cli: absorber and pipeline artifacts validate") {
  CHECK(run("gen random-mindeg --n 40 --t 1/2 --mu 1/10 --seed 4 -o /tmp/hk4cli_md.hwg") == 0);
  CHECK(run("absorb build -g /tmp/hk4cli_md.hwg --target 0,1,2,3 -o /tmp/hk4cli_abs.json") == 0);
  CHECK(run("validate -g /tmp/hk4cli_md.hwg -i /tmp/hk4cli_abs.json") == 0);

  CHECK(run("pipeline -g /tmp/hk4cli_md.hwg --mu 1/10 --gamma 2/5 --xi 1/10 "
            "--seed 4 -o /tmp/hk4cli_pipe.json") == 0);
  CHECK(run("validate -g /tmp/hk4cli_md.hwg -i /tmp/hk4cli_pipe.json") == 0);
}

TEST_CASE("cli: scan emits csv") {
  CHECK(run("scan --n 8 --t 1/2 --mu-grid 0,1/10 --seeds 1,2 --family allones "
            "--mode exact -o /tmp/hk4cli_scan.csv") == 0);
  std::string csv = slurp("/tmp/hk4cli_scan.csv");
  CHECK(csv.find("n,t,mu,seed,mode,success,uncovered,wall_ms") == 0);
  CHECK(csv.find("8,1/2,0,1,exact,1,0,") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run("no-such-command") == 2);
  CHECK(run("gen extremal --n 8 --r 4 --t nonsense -o /tmp/x.hwg") == 2);
  CHECK(run("degree -g /tmp/does_not_exist.hwg") == 2);
  CHECK(run("gen extremal --n 9 --r 4 --t 1/2 -o /tmp/x.hwg") == 2);  // 4 ∤ 9
  CHECK(run("--help") == 0);
}
