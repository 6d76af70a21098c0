#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Exercises the installed binary end to end: exit codes, output formats and
// byte-level reproducibility of every command.

namespace {

const std::string kCli = HGT_CLI_PATH;

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/hgt_cli_test_") + name;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("verify-lemmas --group Z12 --trials 5 --seed 7") == 0);
  CHECK(run("--help") == 0);
  CHECK(run("bogus-subcommand") == 2);
  CHECK(run("verify-lemmas --group NOPE") == 2);
  CHECK(run("period --group Z8 --instance periodic") == 2);  // missing --H
  CHECK(run("ccr --group Z16 --k 16 --t 2 --instance disjoint-range --trials 1 --budget 4") == 3);
}

TEST_CASE("byte-identical reruns") {
  const std::string a = tmp_path("a.json"), b = tmp_path("b.json");

  for (const std::string& args : std::vector<std::string>{
           std::string("verify-lemmas --group Z12 --trials 10 --seed 7"),
           std::string("period --group Z8 --K gens= --delta 0.3 --instance periodic "
                       "--H \"gens=(4)\" --trials 5 --seed 11"),
           std::string("period-general --group D4 --delta 0.3 --instance injective "
                       "--trials 5 --seed 11"),
           std::string("ccr --group Z8 --k 2 --t 1 --delta 0.3 "
                       "--instance hidden-translation --u \"(4)\" --trials 5 --seed 11"),
           std::string("lowerbound --group Z256 --q 16 --trials 50 --seed 11"),
           std::string("gen-instance --group Z8 --instance periodic --H \"gens=(2)\" --seed 3"),
       }) {
    CAPTURE(args);
    REQUIRE(run(args + " --out " + a) == 0);
    REQUIRE(run(args + " --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
  }
}

TEST_CASE("csv format") {
  const std::string path = tmp_path("c.csv");
  REQUIRE(run("period --group Z8 --delta 0.3 --instance injective --trials 3 --seed 2 "
              "--format csv --out " + path) == 0);
  const std::string text = slurp(path);
  CHECK(text.find("trial,seed,accepted") == 0);
  CHECK(text.find("# summary") != std::string::npos);
  std::remove(path.c_str());

  const std::string lb = tmp_path("lb.csv");
  REQUIRE(run("lowerbound --group Z256 --q 8 --trials 20 --seed 2 --format csv --out " + lb) == 0);
  CHECK(slurp(lb).find("group,order,q,trials") == 0);
  std::remove(lb.c_str());
}

TEST_CASE("instance files replay") {
  const std::string inst = tmp_path("inst.json");
  const std::string out1 = tmp_path("r1.json");
  const std::string out2 = tmp_path("r2.json");
  REQUIRE(run("gen-instance --group Z8 --instance periodic --H \"gens=(4)\" --seed 5 --out " +
              inst) == 0);
  REQUIRE(run("period --delta 0.3 --trials 4 --seed 9 --instance-file " + inst +
              " --out " + out1) == 0);
  REQUIRE(run("period --delta 0.3 --trials 4 --seed 9 --instance-file " + inst +
              " --out " + out2) == 0);
  const std::string text = slurp(out1);
  CHECK(text == slurp(out2));
  // the replayed periodic instance still has distance zero to the property
  CHECK(text.find("\"exact_distance\": \"0\"") != std::string::npos);
  std::remove(inst.c_str());
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}
