#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qhall/cli.hpp"

using namespace qhall;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  Run r;
  r.code = run_cli(args, o, e);
  r.out = o.str();
  r.err = e.str();
  return r;
}

/** Run the installed binary through the shell; stderr is dropped. */
Run binary(const std::string& args) {
  std::string cmd = std::string(QHALL_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Run r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int rc = pclose(p);
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  r.code = WEXITSTATUS(rc);
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("gf golden line") {
  Run r = binary("gf lhp_q n=2 order=4 --format=plain");
  CHECK(r.code == 0);
  CHECK(r.out == "1 + q + q^2 + 2*q^3 + 2*q^4\n");
}

TEST_CASE("enum golden rows") {
  Run r = binary("enum A n=2 k=2 maxw=2");
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("() weight=0 ", 0) == 0);
  CHECK(rows[1].rfind("(1,0) weight=1 ", 0) == 0);
  CHECK(rows[2].rfind("(2,0) weight=2 ", 0) == 0);
  CHECK(rows[3].rfind("(1,1) weight=2 ", 0) == 0);
  CHECK(rows[1].find("odd_index_sum=1") != std::string::npos);
  CHECK(rows[3].find("last_part=1") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(binary("gf talh_uvq n=1 k=3 order=5").code == 3);   // formula domain
  CHECK(binary("enum A n=1 k=9 maxw=3").code == 3);         // family domain
  CHECK(binary("nonsense").code == 2);                      // unknown verb
  CHECK(binary("gf").code == 2);                            // missing spec
  CHECK(binary("gf lhp_q n=2 --format=yaml").code == 2);    // unknown format
  CHECK(binary("enum A n=2 k=2").code == 2);                // missing maxw
  CHECK(binary("check NOPE").code == 2);                    // unknown check id
  CHECK(binary("check FIN3 k=1 order=8 --fin3-reading=unbounded").code == 1);
  CHECK(binary("suite --nmax=1 --order=5").code == 0);
}

TEST_CASE("byte-identical reruns") {
  const std::string args = "suite --nmax=2 --order=8 --format=json";
  Run a = binary(args);
  Run b = binary(args);
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("check plain output") {
  Run r = cli({"check", "EQ6", "n=3", "k=2", "order=10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("EQ6(n=3,k=2) order=10: PASS", 0) == 0);
  CHECK(r.err.rfind("# elapsed_ms ", 0) == 0);
}

TEST_CASE("check json report and witness") {
  Run pass = cli({"check", "EQ6", "n=3", "k=2", "order=10", "--format=json"});
  CHECK(pass.code == 0);
  Json jp = Json::parse(pass.out);
  CHECK(jp["check_id"] == "EQ6");
  CHECK(jp["params"]["n"] == 3);
  CHECK(jp["params"]["k"] == 2);
  CHECK(jp["order"] == 10);
  CHECK(jp["pass"] == true);
  CHECK(!jp.contains("witness"));
  CHECK(!jp.contains("elapsed_ms"));

  Run fail = cli({"check", "FIN3", "k=1", "order=8", "--fin3-reading=unbounded",
                  "--format=json"});
  CHECK(fail.code == 1);
  Json jf = Json::parse(fail.out);
  CHECK(jf["pass"] == false);
  REQUIRE(jf.contains("witness"));
  CHECK(jf["witness"]["exps"]["z"] == 2);
  CHECK(jf["witness"]["exps"]["q"] == 4);
  CHECK(jf["witness"]["lhs"] == "1");
  CHECK(jf["witness"]["rhs"] == "2");
  CHECK(jf["params"]["unbounded"] == 1);
}

TEST_CASE("gf json terms") {
  Run r = cli({"gf", "lhp_q", "n=1", "order=3", "--format=json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  CHECK(j[0]["coeff"] == "1");
  CHECK(j[0]["exps"].empty());
  CHECK(j[3]["coeff"] == "1");
  CHECK(j[3]["exps"]["q"] == 3);
}

TEST_CASE("gf csv table") {
  Run r = cli({"gf", "lhp_q", "n=2", "order=2", "--format=csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "q,coeff\n0,1\n1,1\n2,1\n");
}

TEST_CASE("oracle and formula expansions agree through the cli") {
  Run closed = cli({"gf", "tlh_xy", "n=2", "k=2", "order=6"});
  Run oracle = cli({"gf", "L", "n=2", "k=2", "stats=xy", "order=6"});
  CHECK(closed.code == 0);
  CHECK(oracle.code == 0);
  CHECK(closed.out == oracle.out);

  Run aclosed = cli({"gf", "talh_xy", "n=2", "k=2", "order=6"});
  Run aoracle = cli({"gf", "A", "n=2", "k=2", "stats=xy", "order=6"});
  CHECK(aclosed.out == aoracle.out);
  CHECK(aclosed.code == 0);
}

TEST_CASE("vars override for substituted forms") {
  Run subst = cli({"gf", "tlh_xy(n=2,k=2;x->q,y->q)", "vars=q", "order=5"});
  Run weight = cli({"gf", "L", "n=2", "k=2", "stats=q", "order=5"});
  CHECK(subst.code == 0);
  CHECK(subst.out == weight.out);
}

TEST_CASE("out flag writes the file instead of stdout") {
  const std::string path = "/tmp/qhall_cli_out.txt";
  std::remove(path.c_str());
  Run r = cli({"gf", "lhp_q", "n=2", "order=4", "out=" + path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "1 + q + q^2 + 2*q^3 + 2*q^4\n");
}

TEST_CASE("bijection trace and sweep") {
  Run trace = cli({"bijection", "bme", "n=2", "lambda=(1)", "s=0"});
  CHECK(trace.code == 0);
  CHECK(trace.out.find("->") != std::string::npos);

  Run sweep = cli({"bijection", "theta_nk", "n=2", "k=2", "maxw=6"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("PASS") != std::string::npos);
  CHECK(sweep.out.find("injective=yes") != std::string::npos);

  Run json = cli({"bijection", "theta_nk", "n=2", "k=2", "maxw=6", "--format=json"});
  Json j = Json::parse(json.out);
  CHECK(j["map"] == "theta_nk");
  CHECK(j["pass"] == true);
  CHECK(j["codomain_size"] == j["pairs_checked"]);
}

TEST_CASE("suite only filter and config file") {
  Run only = cli({"suite", "--only=EQ1", "--nmax=2", "--format=json"});
  CHECK(only.code == 0);
  Json j = Json::parse(only.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  for (const auto& rep : j) {
    CHECK(rep["check_id"] == "EQ1");
    CHECK(rep["pass"] == true);
  }

  const std::string cfg = "/tmp/qhall_cli_cfg.json";
  {
    std::ofstream f(cfg);
    f << "{\"nmax\": 1, \"order\": 6, \"only\": \"EQ6\"}\n";
  }
  Run viafile = cli({"suite", "--config=" + cfg, "--format=json"});
  CHECK(viafile.code == 0);
  Json jf = Json::parse(viafile.out);
  REQUIRE(jf.size() == 3);  // (n,k) in {(0,0),(1,0),(1,1)}
  CHECK(jf[0]["check_id"] == "EQ6");

  Run overridden = cli({"suite", "--config=" + cfg, "--only=EQ1", "--format=json"});
  Json jo = Json::parse(overridden.out);
  REQUIRE(jo.size() == 2);  // n in {0,1}
  CHECK(jo[0]["check_id"] == "EQ1");

  {
    std::ofstream f(cfg);
    f << "{\"bogus\": 1}\n";
  }
  CHECK(cli({"suite", "--config=" + cfg}).code == 2);
}

TEST_CASE("default suite passes end to end") {
  Run r = cli({"suite", "--order=15", "--nmax=5", "--format=json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 569);
  CHECK(j[0]["check_id"] == "EQ1");
  for (const auto& rep : j) CHECK(rep["pass"] == true);
}

TEST_CASE("enum json rows") {
  Run r = cli({"enum", "P", "k=1", "maxw=3", "--format=json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[2]["weight"] == 2);
  CHECK(j[2]["parts"] == Json::array({2}));
  CHECK(!j[2].contains("ceil_image"));

  Run ramped = cli({"enum", "L", "n=2", "k=2", "maxw=3", "--format=json"});
  Json jr = Json::parse(ramped.out);
  for (const auto& row : jr)
    if (row["weight"] != 0) CHECK(row.contains("ceil_image"));
}

TEST_CASE("usage rejections") {
  CHECK(cli({"enum", "P", "k=1", "maxw=2", "--format=csv"}).code == 2);
  CHECK(cli({"gf", "lhp_q", "n=1", "n=2"}).code == 2);          // duplicate key
  CHECK(cli({"gf", "lhp_q", "n=1", "bogus=3"}).code == 2);      // unknown key
  CHECK(cli({"suite", "--only=NOPE"}).code == 2);               // unknown id
  CHECK(cli({"gf", "lhp_q", "order=-2"}).code == 2);            // negative order
  CHECK(cli({"gf", "lhp_q", "n=abc"}).code == 2);               // non-integer
  CHECK(cli({"bijection", "bme", "lambda=(1)"}).code == 2);     // missing n
  CHECK(cli({"check", "EQ6", "k=2", "order=6"}).code == 3);     // missing n: module report
  CHECK(cli({}).code == 2);
  Run help = cli({"help"});
  CHECK(help.code == 0);
  CHECK(help.out.rfind("usage:", 0) == 0);
}
