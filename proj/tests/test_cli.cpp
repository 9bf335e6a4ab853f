// Runs the swipt executable and checks output and exit codes.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SWIPT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(int k) {
  return std::string(SWIPT_DATA_DIR) + "/realization" + std::to_string(k) + ".json";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / "swipt_test_cli";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("solve echoes norms and reports a feasible point") {
  const Run r = run("solve --instance " + data(1) + " --scheme tdma-a --e1 0 --e2 0 --grid 16");
  CHECK(r.code == 0);
  CHECK(r.out.find("|h11| = 0.5464") != std::string::npos);
  CHECK(r.out.find("|h12| = 0.9925") != std::string::npos);
  CHECK(r.out.find("|h21| = 0.6765") != std::string::npos);
  CHECK(r.out.find("|h22| = 0.6865") != std::string::npos);
  CHECK(r.out.find("alpha = 0\n") != std::string::npos);

  const Run r2 = run("solve --instance " + data(2) + " --scheme ideal --grid 16");
  CHECK(r2.code == 0);
  CHECK(r2.out.find("|h12| = 1.2156") != std::string::npos);
  CHECK(r2.out.find("|h21| = 0.8286") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("solve --instance " + data(1) + " --scheme tdma-b --e1 5 --e2 5 --grid 16").code == 2);
  const fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{\n  \"nt\": 2,\n  \"h11\": oops\n}\n";
  CHECK(run("solve --instance " + bad.string()).code == 3);
  CHECK(run("solve --instance /nonexistent/x.json").code == 4);
  CHECK(run("sweep --instance " + data(1) + " --steps 2 --scheme tdma-a --grid 16 --out "
            "/nonexistent/dir/out.csv").code == 4);
  CHECK(run("solve").code == 1);
  CHECK(run("solve --instance " + data(1) + " --scheme nope").code == 1);
  CHECK(run("compare --instance " + data(1) + " --scheme ideal").code == 1);
}

TEST_CASE("sweep output is deterministic and the sidecar re-evaluates") {
  const fs::path a = scratch() / "a.csv", b = scratch() / "b.csv";
  const std::string flags = " --instance " + data(2) +
                            " --steps 3 --grid 12 --alpha-steps 11 --threads 2 --emit-solutions";
  REQUIRE(run("sweep" + flags + " --out " + a.string()).code == 0);
  REQUIRE(run("sweep" + flags + " --out " + b.string()).code == 0);
  const std::string ca = slurp(a);
  CHECK(ca == slurp(b));
  CHECK(ca.rfind("e1,e2,scheme,feasible,alpha,sum_rate,r1,r2,energy1,energy2,w_star\n", 0) == 0);
  CHECK(std::count(ca.begin(), ca.end(), '\n') == 28);
  CHECK(fs::exists(a.string() + ".solutions.json"));
  CHECK(slurp(a.string() + ".solutions.json") == slurp(b.string() + ".solutions.json"));
}

TEST_CASE("compare prints a verdict") {
  const Run r = run("compare --instance " + data(1) +
                    " --steps 2 --scheme ideal,tdma-a --grid 12 --e1-max 0.1 --e2-max 0.1");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: ") != std::string::npos);
}

TEST_CASE("oracle and random-instance subcommands") {
  const Run o = run("oracle --instance " + data(1) + " --grid 8");
  CHECK(o.code == 0);
  CHECK(o.out.find("value = ") != std::string::npos);
  const Run a = run("random-instance --seed 5 --nt 3");
  const Run b = run("random-instance --seed 5 --nt 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"nt\": 3") != std::string::npos);
}
