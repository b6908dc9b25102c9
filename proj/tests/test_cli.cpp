#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "doctest.h"
#include "nisg/io.hpp"
#include "nisg/pairmap.hpp"
#include "nisg/rational.hpp"

using namespace nisg;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(NISG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

const fs::path& tmp_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("nisg-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string tmp(const std::string& name) {
  return (tmp_dir() / name).string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// Shared inputs, generated once.
const std::string& chain2() {
  static const std::string path = [] {
    const std::string p = tmp("chain2.json");
    REQUIRE(run("generate --family chain --n 2 --out " + p).exit_code == 0);
    return p;
  }();
  return path;
}

const std::string& val01() {
  static const std::string path = [] {
    const std::string p = tmp("val01.json");
    save_valuation({Rational(0), Rational(1)}, p);
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("generate then verify a finite carrier") {
  const std::string f = tmp("powerset3.json");
  REQUIRE(run("generate --family powerset --n 3 --out " + f).exit_code == 0);
  const RunResult r = run("verify --what semigroup " + f);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"pass\": true"));
  CHECK(contains(r.out, "\"exhaustive\": true"));
}

TEST_CASE("pseudo-norm verification passes on the two-chain") {
  const RunResult r =
      run("verify --what pseudonorm " + chain2() + " " + val01());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"pass\": true"));
}

TEST_CASE("induced d1 is written exactly and reproducibly") {
  const std::string out1 = tmp("d1-a.json");
  const std::string out2 = tmp("d1-b.json");
  const std::string args =
      "induce --variant d1 " + chain2() + " " + val01() + " --out ";
  REQUIRE(run(args + out1).exit_code == 0);
  REQUIRE(run(args + out2).exit_code == 0);

  const PairMapFile f = load_pairmap(out1);
  REQUIRE(f.map.size() == 2);
  CHECK(f.map.at(0, 0) == Rational(0));
  CHECK(f.map.at(0, 1) == Rational(1, 2));
  CHECK(f.map.at(1, 0) == Rational(1, 2));
  CHECK(f.map.at(1, 1) == Rational(0));

  std::ifstream a(out1), b(out2);
  const std::string sa((std::istreambuf_iterator<char>(a)),
                       std::istreambuf_iterator<char>());
  const std::string sb((std::istreambuf_iterator<char>(b)),
                       std::istreambuf_iterator<char>());
  CHECK(sa == sb);
}

TEST_CASE("a non-separating valuation fails norm verification with exit 1") {
  const std::string c3 = tmp("chain3.json");
  REQUIRE(run("generate --family chain --n 3 --out " + c3).exit_code == 0);
  const std::string g9 = tmp("grid9.json");
  REQUIRE(run("generate --family product --a " + c3 + " --b " + c3 +
              " --out " + g9)
              .exit_code == 0);

  const std::string vmax = tmp("vmax.json");
  save_valuation({Rational(0), Rational(1), Rational(2), Rational(1),
                  Rational(1), Rational(2), Rational(2), Rational(2),
                  Rational(2)},
                 vmax);

  const RunResult r = run("verify --what norm " + g9 + " " + vmax);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "\"pass\": false"));
  CHECK(contains(r.out, "separation"));
}

TEST_CASE("malformed rational input exits with status 2") {
  const std::string bad = tmp("bad-val.json");
  write_text_file(bad, R"({"kind":"valuation","n":2,"values":["0","1/0"]})"
                       "\n");
  const RunResult r =
      run("verify --what pseudonorm " + chain2() + " " + bad);
  CHECK(r.exit_code == 2);
}

TEST_CASE("sampled verification output is byte-stable") {
  const std::string b = tmp("bicyclic2.json");
  REQUIRE(run("generate --family bicyclic --k 2 --norm l1 --out " + b)
              .exit_code == 0);
  const RunResult r1 = run("verify --what pseudonorm " + b + " --seed 5");
  const RunResult r2 = run("verify --what pseudonorm " + b + " --seed 5");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);

  const RunResult t1 =
      run("verify --what pseudonorm " + b + " --seed 5 --threads 1");
  const RunResult t7 =
      run("verify --what pseudonorm " + b + " --seed 5 --threads 7");
  CHECK(t1.out == t7.out);
  CHECK(t1.out == r1.out);
  CHECK(contains(r1.out, "\"seed\": 5"));
}

TEST_CASE("classification of a separating valuation") {
  const RunResult r = run("classify " + chain2() + " " + val01());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"kind\": \"classification\""));
  CHECK(contains(r.out, "\"is_norm\": true"));
  CHECK(contains(r.out, "\"leq_p_equals_leq_s\": true"));
}

TEST_CASE("quotient collapses duplicated points") {
  const PairMap c(2, {Rational(1), Rational(1), Rational(1), Rational(1)});
  const std::string in = tmp("const-interlaced.json");
  save_interlaced(c, c, in);

  const std::string out = tmp("quotient.json");
  const RunResult r = run("quotient " + in + " --out " + out);
  CHECK(r.exit_code == 0);

  const InterlacedFile f = load_interlaced(out);
  CHECK(f.p.size() == 1);
  CHECK(f.p.at(0, 0) == Rational(1));
  std::ifstream q(out);
  const std::string bytes((std::istreambuf_iterator<char>(q)),
                          std::istreambuf_iterator<char>());
  CHECK(contains(bytes, "\"projection\""));
}

TEST_CASE("bridge roundtrip on the two-chain") {
  const RunResult r =
      run("bridge --direction roundtrip " + chain2() + " " + val01());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"kind\": \"bridge-report\""));
  CHECK(contains(r.out, "\"direction\": \"roundtrip\""));
  CHECK(contains(r.out, "roundtrip-exact"));
}

TEST_CASE("pairmap verification distinguishes pass from failure") {
  const PairMap good(2, {Rational(0), Rational(1), Rational(1), Rational(1)});
  const std::string gp = tmp("ppm-good.json");
  save_pairmap(good, gp);
  CHECK(run("verify --what ppm " + gp).exit_code == 0);

  const PairMap broken(2,
                       {Rational(2), Rational(1), Rational(1), Rational(0)});
  const std::string bp = tmp("ppm-broken.json");
  save_pairmap(broken, bp);
  const RunResult r = run("verify --what ppm " + bp);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "self-bound"));
}

TEST_CASE("text format renders a human-readable report") {
  const RunResult r = run("verify --what pseudonorm " + chain2() + " " +
                          val01() + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "PASS"));
  CHECK_FALSE(contains(r.out, "{"));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("--definitely-not-a-flag").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("verify --what nonsense x.json").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}
