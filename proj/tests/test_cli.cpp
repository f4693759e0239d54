#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lmflat/cli.hpp"
#include "lmflat/suite.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lmflat;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lmflat_test_" + name);
}

} // namespace

TEST_CASE("weyl length example") {
  auto r = run({"weyl", "--rank", "2", "--length-of", "t:1,1,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
}

TEST_CASE("weyl queries") {
  auto r = run({"weyl", "--rank", "2", "--bruhat", "s0", "s0*s1"});
  CHECK(r.out == "true\n");
  r = run({"weyl", "--rank", "2", "--bruhat", "s0*s1", "s0"});
  CHECK(r.out == "false\n");
  r = run({"weyl", "--rank", "2", "--orbit", "1,1,0,0"});
  CHECK(lines(r.out).size() == 4);
  r = run({"weyl", "--rank", "2", "--reduced-word", "t:1,1,0,0", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "weyl");
  CHECK(j["result"]["reduced_word"]["letters"] == nlohmann::json({2, 1, 2}));
}

TEST_CASE("ideal ring R_1 prints one generator") {
  auto r = run({"ideal", "--ring-R", "1", "--format", "text"});
  REQUIRE(r.code == 0);
  std::vector<std::string> polys;
  for (const auto& l : lines(r.out))
    if (!l.starts_with("#")) polys.push_back(l);
  REQUIRE(polys.size() == 1);
  CHECK(polys[0] == "-c_1_2*c_2_1 + c_1_1*c_2_2");
  auto d = run({"ideal", "--ring-R", "1", "--order", "deglex"});
  CHECK(lines(d.out).back() == "c_1_1*c_2_2 - c_1_2*c_2_1");
}

TEST_CASE("ideal json") {
  auto r = run({"ideal", "--rank", "3", "--index", "2", "--fibre", "special", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["fibre"] == "special");
  CHECK(j["result"]["generators"].size() > 0);
  CHECK(run({"ideal", "--rank", "3", "--index", "1", "--implied"}).code == 0);
}

TEST_CASE("hilbert with brute force") {
  auto r = run({"hilbert", "--ring-R", "1", "--max-degree", "3", "--brute-force"});
  REQUIRE(r.code == 0);
  auto L = lines(r.out);
  CHECK(L[1] == "0\t1\t1");
  CHECK(L[4] == "3\t16\t16");
  CHECK(L[5] == "dimension 3");
}

TEST_CASE("tableaux") {
  auto r = run({"tableaux", "--rank", "2", "--max-degree", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["counts"] == nlohmann::json({1, 16, 125, 656}));
  CHECK(j["result"]["minors"] == 41);
  auto s = run({"tableaux", "--rank", "2", "--size", "2"});
  CHECK(lines(s.out).front() == "(2,1|1,2)");
  CHECK(lines(s.out).size() == 25);
  auto t = run({"tableaux", "--rank", "1", "--list-degree", "2"});
  CHECK(lines(t.out).size() == 9);
}

TEST_CASE("alcoves and chart") {
  auto a = run({"alcoves", "--rank", "2"});
  CHECK(a.code == 0);
  CHECK(lines(a.out)[0] == "admissible 13");
  CHECK(lines(a.out)[3] == "equal yes");
  auto e = run({"alcoves", "--rank", "2", "--list", "extreme"});
  CHECK(lines(e.out).size() == 8);
  auto c = run({"chart", "--rank", "3"});
  CHECK(c.code == 0);
  CHECK(lines(c.out).size() == 8);
  auto x = run({"chart", "--rank", "2", "--x0", "1,0,1,0", "--index", "1", "--format", "json"});
  CHECK(x.code == 0);
  auto j = nlohmann::json::parse(x.out);
  CHECK(j["result"]["extreme"].size() == 1);
  CHECK(j["result"]["fibre"]["dim_special"] == 3);
  CHECK(run({"chart", "--rank", "2", "--x0", "1,1,1,1"}).code == 2);
}

TEST_CASE("verify example") {
  auto r = run({"verify", "--rank", "2", "--max-degree", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  Adm=Perm r=2") != std::string::npos);
  CHECK(r.out.find("PASS  deConcini r=2 d≤3") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(lines(r.out).back() == "verdict: pass");
}

TEST_CASE("verify json report") {
  auto r = run({"verify", "--rank", "1", "--max-degree", "3", "--format", "json", "--jobs", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "command", "config", "checks", "verdict"});
  CHECK(j["verdict"] == "pass");
  for (const auto& c : j["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK_FALSE(c.contains("witness"));
    CHECK_FALSE(c.contains("ms"));
    CHECK(c.contains("anchor"));
  }
  auto t = run({"verify", "--rank", "1", "--max-degree", "2", "--format", "json", "--timings"});
  CHECK(nlohmann::json::parse(t.out)["checks"][0].contains("ms"));
}

TEST_CASE("output is byte identical across runs and job counts") {
  auto a = run({"verify", "--rank", "2", "--format", "json", "--jobs", "1"});
  auto b = run({"verify", "--rank", "2", "--format", "json", "--jobs", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto c = run({"ideal", "--rank", "3", "--index", "2"});
  CHECK(c.out == run({"ideal", "--rank", "3", "--index", "2"}).out);
}

TEST_CASE("every corrupted check makes verify fail") {
  for (int rank : {1, 2}) {
    suite::VerifyConfig cfg;
    cfg.rank = rank;
    cfg.max_degree = 2;
    cfg.trials = 5;
    for (const auto& job : suite::verify_plan(cfg)) {
      CAPTURE(job.name);
      auto r = run({"verify", "--rank", std::to_string(rank), "--max-degree", "2", "--trials", "5",
                    "--corrupt", job.name, "--format", "json"});
      CHECK(r.code == 1);
      auto j = nlohmann::json::parse(r.out);
      CHECK(j["verdict"] == "fail");
      int failed = 0;
      for (const auto& c : j["checks"])
        if (c["status"] == "fail") {
          ++failed;
          CHECK(c.contains("witness"));
        }
      CHECK(failed == 1);
    }
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"weyl", "--rank", "2"}).code == 2);
  CHECK(run({"weyl", "--rank", "2", "--length-of", "s7"}).code == 2);
  CHECK(run({"ideal"}).code == 2);
  CHECK(run({"ideal", "--ring-R", "1", "--grassmannian", "--rank", "2"}).code == 2);
  CHECK(run({"ideal", "--rank", "3", "--index", "3"}).code == 2);
  CHECK(run({"verify", "--primes", "100"}).code == 2);
  CHECK(run({"verify", "--format", "yaml"}).code == 2);
  auto r = run({"hilbert", "--bogus"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("config file supplies defaults and flags win") {
  auto path = temp_file("config.txt");
  {
    std::ofstream f(path);
    f << "# defaults\nrank = 3\nlength-of = t:1,1,1,0,0,0\n";
  }
  auto r = run({"weyl", "--config", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  auto s = run({"weyl", "--config", path.string(), "--rank", "2", "--length-of", "t:1,1,0,0"});
  CHECK(s.out == "3\n");
  {
    std::ofstream f(path);
    f << "nonsense = 1\n";
  }
  CHECK(run({"weyl", "--config", path.string(), "--length-of", "e"}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"weyl", "--config", path.string(), "--length-of", "e"}).code == 2);
}

TEST_CASE("output path") {
  auto path = temp_file("out.txt");
  auto r = run({"weyl", "--rank", "2", "--length-of", "s0*s1", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "2\n");
  std::filesystem::remove(path);
}
