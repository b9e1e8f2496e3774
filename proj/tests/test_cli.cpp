#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct TmpDir {
  fs::path path;
  TmpDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("htcli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TmpDir() { fs::remove_all(path); }
};

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + HT_CLI_PATH + "\" " + args +
                    " >/dev/null 2>/dev/null";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cells command writes the partition with the resolved config") {
  TmpDir tmp;
  CHECK(run_cli("cells --type A1 --n 1 --J full --Jp full --out " +
                tmp.path.string()) == 0);
  ordered_json doc = ordered_json::parse(slurp(tmp.path / "cells.json"));
  CHECK(doc["config"]["type"] == "A1");
  CHECK(doc["config"]["n"] == 1);
  CHECK(doc["config"]["J"] == ordered_json::array({1}));
  CHECK(doc["config"]["d0"] == 3);
  CHECK(doc["cells"].size() == 2);

  CHECK(run_cli("cells --type A1 --n 2 --out " + tmp.path.string()) == 0);
  doc = ordered_json::parse(slurp(tmp.path / "cells.json"));
  CHECK(doc["cells"].size() == 3);

  CHECK(run_cli("cells --type A2 --n 1 --J empty --Jp empty --out " +
                tmp.path.string()) == 0);
  doc = ordered_json::parse(slurp(tmp.path / "cells.json"));
  CHECK(doc["cells"].size() == 6);
  for (const auto& cell : doc["cells"]) CHECK(cell.size() == 1);
}

TEST_CASE("kl and stalks tables match frozen rank-one goldens") {
  TmpDir tmp;
  CHECK(run_cli("kl --type A1 --n 1 --out " + tmp.path.string()) == 0);
  CHECK(slurp(tmp.path / "kl.csv") ==
        "lambda,zprime,z,poly\n"
        "\"(0)\",e,e,1\n"
        "\"(0)\",e,s1,v^-1\n"
        "\"(0)\",s1,s1,1\n");

  CHECK(run_cli("stalks --type A1 --n 1 --out " + tmp.path.string()) == 0);
  CHECK(slurp(tmp.path / "stalks.csv") ==
        "lambda,zprime,z,i,mult\n"
        "\"(0)\",e,e,0,1\n"
        "\"(0)\",e,s1,0,1\n"
        "\"(0)\",s1,s1,0,1\n");
}

TEST_CASE("gamma table for the nontrivial rank-one block") {
  TmpDir tmp;
  CHECK(run_cli("gamma --type A1 --n 2 --lambda 1/2 --out " +
                tmp.path.string()) == 0);
  CHECK(slurp(tmp.path / "gamma.csv") ==
        "w,lambda,wprime,lambdaprime,target_w,target_lambda,poly\n"
        "e,\"(1/2)\",e,\"(1/2)\",e,\"(1/2)\",1\n"
        "e,\"(1/2)\",s1,\"(1/2)\",s1,\"(1/2)\",1\n"
        "s1,\"(1/2)\",e,\"(1/2)\",s1,\"(1/2)\",1\n"
        "s1,\"(1/2)\",s1,\"(1/2)\",e,\"(1/2)\",1\n");
}

TEST_CASE("verify writes a report and reflects pass in the exit code") {
  TmpDir tmp;
  CHECK(run_cli("verify duality --type A1 --n 1 --out " + tmp.path.string()) ==
        0);
  ordered_json doc = ordered_json::parse(slurp(tmp.path / "verify.json"));
  CHECK(doc["suite"] == "duality");
  CHECK(doc["all_pass"] == true);
  REQUIRE(doc["checks"].size() == 1);
  CHECK(doc["checks"][0]["cases"] == 2);
  for (const auto& row : doc["checks"][0]["rows"]) {
    CHECK(row["pass"] == true);
    CHECK(row["residual_zero"] == true);
    CHECK(row["residual_rank"] == 0);
  }

  CHECK(run_cli("verify facets --type A2 --eps flip --out " +
                tmp.path.string()) == 0);
  doc = ordered_json::parse(slurp(tmp.path / "verify.json"));
  CHECK(doc["checks"][0]["cases"] == 12);
  std::string csv = slurp(tmp.path / "facets.csv");
  CHECK(csv.substr(0, 38) == "element,lhs_trace,rhs_trace\ne,7,7\ns1,1");
  CHECK(csv.find("e eps,-1,-1") != std::string::npos);

  CHECK(run_cli("verify cosets --type B2 --n 2 --out " + tmp.path.string()) ==
        0);
  doc = ordered_json::parse(slurp(tmp.path / "verify.json"));
  CHECK(doc["all_pass"] == true);
}

TEST_CASE("output bytes are reproducible for a fixed config and seed") {
  TmpDir t1, t2;
  std::string common = "verify all --type A1 --n 2 --seed 11 --out ";
  CHECK(run_cli(common + t1.path.string()) == 0);
  CHECK(run_cli(common + t2.path.string()) == 0);
  CHECK(slurp(t1.path / "verify.json") == slurp(t2.path / "verify.json"));
  CHECK(slurp(t1.path / "facets.csv") == slurp(t2.path / "facets.csv"));
}

TEST_CASE("config file merges under command-line overrides") {
  TmpDir tmp;
  std::ofstream(tmp.path / "run.cfg")
      << "type = A1\nn = 2\n# trailing comment\nJ = full\nJp = full\n";
  CHECK(run_cli("cells --config " + (tmp.path / "run.cfg").string() +
                " --out " + tmp.path.string()) == 0);
  ordered_json doc = ordered_json::parse(slurp(tmp.path / "cells.json"));
  CHECK(doc["cells"].size() == 3);

  CHECK(run_cli("cells --config " + (tmp.path / "run.cfg").string() +
                " --n 1 --out " + tmp.path.string()) == 0);
  doc = ordered_json::parse(slurp(tmp.path / "cells.json"));
  CHECK(doc["config"]["n"] == 1);
  CHECK(doc["cells"].size() == 2);
}

TEST_CASE("configuration errors exit with status two") {
  TmpDir tmp;
  std::string out = " --out " + tmp.path.string();
  CHECK(run_cli("cells --type Z9" + out) == 2);
  CHECK(run_cli("cells --type A1 --n 0" + out) == 2);
  CHECK(run_cli("verify bogus --type A1" + out) == 2);
  CHECK(run_cli("kl --type A1 --n 2 --lambda 1/3" + out) == 2);
  CHECK(run_cli("cells --type A1 --J 3" + out) == 2);
  CHECK(run_cli("cells --type A2 --eps 2,2" + out) == 2);
  CHECK(run_cli("cells --config " + (tmp.path / "missing.cfg").string() +
                out) == 2);
  // a missing subcommand is a usage error, never success
  CHECK(run_cli("") != 0);
}
