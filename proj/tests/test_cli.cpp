#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "liered/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = liered::cli::run(args, in, out, err);
  return RunResult{code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("catalog emits parseable files for every family") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"catalog", "heisenberg", "2"},
           {"catalog", "cartan"},
           {"catalog", "f24"},
           {"catalog", "filiform", "5"},
           {"catalog", "jet", "2", "1", "1"},
           {"catalog", "se2"}}) {
    RunResult r = run(args);
    REQUIRE(r.code == 0);
    RunResult a = run({"analyze", "-"}, r.out);
    CHECK(a.code == 0);
  }
  CHECK(run({"catalog", "nosuch"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
}

TEST_CASE("pipeline: heisenberg equivalence at mu = Z*") {
  RunResult alg = run({"catalog", "heisenberg", "1"});
  RunResult r = run({"equivalence", "-", "--mu", "Z=1"}, alg.out);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "EQUIVALENT"));
}

TEST_CASE("pipeline: cartan asimple exits 1 with PROVEN_NO") {
  RunResult alg = run({"catalog", "cartan"});
  RunResult r = run({"asimple", "-"}, alg.out);
  CHECK(r.code == 1);
  CHECK(contains(r.out, "PROVEN_NO"));
}

TEST_CASE("pipeline: f24 generic scan is equivalent at every trial") {
  RunResult alg = run({"catalog", "f24"});
  RunResult r = run({"equivalence", "-", "--random", "--trials", "5", "--seed", "7"},
                    alg.out);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "equivalent: 5/5"));
  CHECK(contains(r.out, "max orbit dim: 4"));
}

TEST_CASE("json and human outputs carry the same verdict") {
  RunResult alg = run({"catalog", "heisenberg", "1"});
  RunResult human = run({"equivalence", "-", "--mu", "Z=1"}, alg.out);
  RunResult machine = run({"equivalence", "-", "--mu", "Z=1", "--json"}, alg.out);
  CHECK(human.code == machine.code);
  json j = json::parse(machine.out);
  CHECK(j["verdict"] == "EQUIVALENT");
  CHECK(j["exit_code"] == 0);
  CHECK(contains(human.out, "verdict: EQUIVALENT"));
}

TEST_CASE("byte-identical output for identical inputs and seed") {
  RunResult alg = run({"catalog", "f24"});
  std::vector<std::string> args{"equivalence", "-",        "--random", "--trials",
                                "4",           "--bound",  "50",       "--seed",
                                "99",          "--json"};
  RunResult a = run(args, alg.out);
  RunResult b = run(args, alg.out);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["seed"] == 99);
  CHECK(j["trials"] == 4);
}

TEST_CASE("asimple on f24 reports the paper witnesses") {
  RunResult alg = run({"catalog", "f24"});
  RunResult r = run({"asimple", "-", "--json"}, alg.out);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["status"] == "PROVEN_YES");
  CHECK(j["witnesses"].size() == 2);
}

TEST_CASE("basis and psi require a certificate") {
  RunResult alg = run({"catalog", "f24"});
  std::string with_cert = alg.out + "certificate\nwitness X1 Y1\nwitness X2 Y2\n";
  RunResult b = run({"basis", "-"}, with_cert);
  CHECK(b.code == 0);
  CHECK(contains(b.out, "Z0:  Z2"));
  RunResult p = run({"psi", "-", "--mu", "Z2=3", "--json"}, with_cert);
  CHECK(p.code == 0);
  CHECK(json::parse(p.out)["psi"] == "9");
  RunResult missing = run({"basis", "-"}, alg.out);
  CHECK(missing.code == 2);
}

TEST_CASE("shift verdict and error codes") {
  RunResult alg = run({"catalog", "heisenberg", "1"});
  RunResult found = run(
      {"shift", "-", "--mu", "Z=2,X1=5", "--mu-tilde", "Z=2,X1=1"}, alg.out);
  CHECK(found.code == 0);
  CHECK(contains(found.out, "Y = "));
  RunResult mismatch =
      run({"shift", "-", "--mu", "Z=2", "--mu-tilde", "Z=3"}, alg.out);
  CHECK(mismatch.code == 2);

  RunResult f23 = run({"catalog", "cartan"});
  RunResult noshift = run(
      {"shift", "-", "--mu", "Y=3,Z2=7", "--mu-tilde", "Y=3,Z2=7,X1=1"}, f23.out);
  CHECK(noshift.code == 1);
  CHECK(contains(noshift.out, "NoShift"));
}

TEST_CASE("semidirect command") {
  std::string spec = "dim 1\nbasis R\naction R = 0 -1 ; 1 0\n";
  RunResult nonzero = run({"semidirect", "-", "--nu", "A1=1"}, spec);
  CHECK(nonzero.code == 0);
  CHECK(contains(nonzero.out, "h_nu dim: 0"));
  RunResult zero = run({"semidirect", "-", "--nu", "A1=0,A2=0"}, spec);
  CHECK(zero.code == 1);
  CHECK(contains(zero.out, "h_nu dim: 1"));
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"analyze", "-"}, "dim x\nbasis A\n").code == 2);
  CHECK(run({"analyze", "-"}, "dim 3\nbasis A B C\nbracket A B = 1 A\nbracket B C = 1 B\n")
            .code == 2);
  CHECK(run({"equivalence", "-", "--mu", "Q=1"}, "dim 1\nbasis A\n").code == 2);
  CHECK(run({"nosuchcommand"}).code == 2);
}

TEST_CASE("algebra files can come from a path instead of stdin") {
  RunResult alg = run({"catalog", "heisenberg", "1"});
  std::string path = "cli_test_h3.txt";
  {
    std::ofstream f(path);
    f << alg.out;
  }
  RunResult r = run({"equivalence", path, "--mu", "Z=1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "EQUIVALENT"));
  std::remove(path.c_str());
  CHECK(run({"analyze", "no_such_file.txt"}).code == 2);
}

TEST_CASE("equivalence --cert adds the psi diagnostic") {
  RunResult alg = run({"catalog", "f24"});
  std::string path = "cli_test_f24cert.txt";
  {
    std::ofstream f(path);
    f << alg.out << "certificate\nwitness X1 Y1\nwitness X2 Y2\n";
  }
  RunResult r = run({"equivalence", path, "--mu", "Z2=3", "--cert", path, "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["analysis"]["psi"] == "9");
  std::remove(path.c_str());
}

TEST_CASE("analyze reports the structure fields in json") {
  RunResult alg = run({"catalog", "cartan"});
  RunResult r = run({"analyze", "-", "--json"}, alg.out);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["dim"] == 5);
  CHECK(j["step"] == 3);
  CHECK(j["metabelian"] == true);
  CHECK(j["grading"] == "stratification");
  CHECK(j["rank"] == 2);
  CHECK(j["maximal_abelian_ideal_dim"] == 3);
  CHECK(j["series_dims"] == json::array({5, 3, 2, 0}));
}
