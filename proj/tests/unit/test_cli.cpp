#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "a2/serialize.hpp"
#include "a2cli/app.hpp"

using namespace a2;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Cyclotomic value_of(const Result& r) { return cyclotomic_from_json(json::parse(r.out).at("value")); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("a2cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table entry (x1, x12) is lambda112") {
    auto r = run({"table", "--case", "atypical", "--lambda", "1,1,1,7/2,1", "--pair", "0,0,1,0,1,0"});
    REQUIRE(r.code == 0);
    CHECK(value_of(r) == Cyclotomic(Rational(7, 2)));
    CHECK(json::parse(r.out)["value"]["q"] == "7/2");
  }

  TEST_CASE("generic N=3 entry (x2, x12^2 x1)") {
    auto r = run({"table", "--case", "generic", "--N", "3", "--q12-exp", "2", "--lambda", "2,3,0,0,0", "--pair",
                  "1,0,0,0,2,1"});
    REQUIRE(r.code == 0);
    Braiding br(3, 1, 2);
    Cyclotomic one_minus = Cyclotomic(1) - br.q().pow(2);
    CHECK(value_of(r) == -(one_minus * one_minus) * br.q21().pow(3) * Cyclotomic(6));
  }

  TEST_CASE("generic N=4 with lambda = 0 is the trivial cocycle") {
    auto r = run({"table", "--case", "generic", "--N", "4"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["entries"].size() == 4096);
    CocycleTable t = table_from_json(j);
    CHECK(t.values == Bifunctional::epsilon(4));
  }

  TEST_CASE("orbit under epsilon reproduces the table") {
    for (std::string format : {"json", "csv", "md"}) {
      auto table = run({"table", "--lambda", "1,-2,1/3,1,1", "--format", format});
      auto orbit = run({"orbit", "--lambda", "1,-2,1/3,1,1", "--format", format});
      auto explicit_eps = run({"orbit", "--lambda", "1,-2,1/3,1,1", "--format", format, "--alpha", "0,0,0,0,0,0,0,0"});
      REQUIRE(table.code == 0);
      CHECK(orbit.out == table.out);
      CHECK(explicit_eps.out == table.out);
    }
  }

  TEST_CASE("orbit changes the table for a nontrivial alpha") {
    auto base = run({"orbit", "--lambda", "1,1,1,1,1", "--format", "csv"});
    auto moved = run({"orbit", "--lambda", "1,1,1,1,1", "--format", "csv", "--alpha", "1,0,0,0,0,0,0,0"});
    REQUIRE(base.code == 0);
    REQUIRE(moved.code == 0);
    CHECK(base.out != moved.out);
  }

  TEST_CASE("exp with e2 = 1 at (x2, x2^2)") {
    auto r = run({"exp", "--e", "0,1,0,0,0", "--pair", "1,0,0,2,0,0"});
    REQUIRE(r.code == 0);
    CHECK(value_of(r) == Cyclotomic(1));
    auto full = run({"exp", "--e", "0,1,0,0,0", "--beta", "0,0,0,0,0,0,0,0"});
    REQUIRE(full.code == 0);
    CHECK(json::parse(full.out)["entries"].size() == 729);
  }

  TEST_CASE("classify verdicts") {
    auto pure = run({"classify", "--lambda", "0,0,0,0,1"});
    REQUIRE(pure.code == 0);
    CHECK(json::parse(pure.out)["verdict"] == "Pure");
    auto exp = run({"classify", "--lambda", "0,1,0,0,0"});
    REQUIRE(exp.code == 0);
    auto j = json::parse(exp.out);
    CHECK(j["verdict"] == "Exponential");
    CHECK(j["verified"] == true);
    CHECK(j.contains("witness"));
    auto csv = run({"classify", "--lambda", "1,1,0,0,0", "--format", "csv"});
    CHECK(csv.out == "verdict,condition,verified\nPure,,true\n");
  }

  TEST_CASE("section dump") {
    auto r = run({"section", "--lambda", "1,1,1,1,1"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["verified"] == true);
    CHECK(j["values"].size() == 27);
    auto md = run({"section", "--lambda", "1,1,1,1,1", "--format", "md"});
    CHECK(md.out.find("| x1 | x1 |") != std::string::npos);
  }

  TEST_CASE("verify passes on the default and generic sessions") {
    auto atypical = run({"verify", "--lambda", "1,2,3,4,5"});
    CHECK(atypical.code == 0);
    CHECK(atypical.out.find("FAIL") == std::string::npos);
    CHECK(atypical.out.find("PASS reconstruction identity") != std::string::npos);
    auto generic = run({"verify", "--case", "generic", "--N", "4", "--q12-exp", "3", "--lambda", "1,-1,2,0,0",
                        "--format", "json"});
    CHECK(generic.code == 0);
    CHECK(json::parse(generic.out)["passed"] == true);
  }

  TEST_CASE("invalid input exits with 1") {
    CHECK(run({"table", "--case", "generic", "--N", "4", "--lambda", "0,0,0,1,0"}).code == 1);
    CHECK(run({"table", "--case", "atypical", "--N", "4"}).code == 1);
    CHECK(run({"table", "--lambda", "1,2"}).code == 1);
    CHECK(run({"table", "--lambda", "1,2,x,0,0"}).code == 1);
    CHECK(run({"table", "--pair", "0,0,1"}).code == 1);
    CHECK(run({"table", "--pair", "0,0,3,0,0,0"}).code == 1);
    CHECK(run({"table", "--format", "xml"}).code == 1);
    CHECK(run({"orbit", "--alpha", "1,2,3"}).code == 1);
    CHECK(run({"exp", "--e", "1"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    auto r = run({"table", "--N", "4", "--case", "generic", "--lambda", "0,0,0,1,0"});
    CHECK(r.err.find("error:") == 0);
  }

  TEST_CASE("help exits with 0") {
    auto r = run({"table", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--pair") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"table", "--lambda", "1/2,-3,q,q^2,1", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> exp{"exp", "--e", "1,2,3,4,5", "--beta", "1,2,3,4,5,6,7,8", "--format", "csv"};
    CHECK(run(exp).out == run(exp).out);
  }

  TEST_CASE("serialized tables reload to the same values") {
    auto r = run({"table", "--lambda", "1/2,-3,q,q^2,1"});
    REQUIRE(r.code == 0);
    CocycleTable t = table_from_json(json::parse(r.out));
    CHECK(to_json(Braiding(3, 1, 1), t).dump(2) + "\n" == r.out);
  }

  TEST_CASE("config file and flag overrides") {
    auto path = temp_path("config.json");
    {
      std::ofstream f(path);
      f << R"({"N": 4, "case": "generic", "q_exp": 1, "q12_exp": 3, "lambda": {"l1": "1", "l2": "q"}, "format": "csv"})";
    }
    auto from_file = run({"table", "--config", path.string()});
    auto from_flags = run({"table", "--case", "generic", "--N", "4", "--q12-exp", "3", "--lambda", "1,q,0,0,0",
                           "--format", "csv"});
    REQUIRE(from_file.code == 0);
    CHECK(from_file.out == from_flags.out);
    auto overridden = run({"table", "--config", path.string(), "--format", "md"});
    CHECK(overridden.out.rfind("| a \\ b |", 0) == 0);
    {
      std::ofstream f(path);
      f << R"({"N": 4, "case": "generic", "lambda": [0, 0, 0, 1, 0]})";
    }
    CHECK(run({"table", "--config", path.string()}).code == 1);
    {
      std::ofstream f(path);
      f << "{not json";
    }
    CHECK(run({"table", "--config", path.string()}).code == 1);
    std::filesystem::remove(path);
  }

  TEST_CASE("--output writes the artifact to a file") {
    auto path = temp_path("table.csv");
    auto r = run({"table", "--format", "csv", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"table", "--format", "csv"}).out);
    std::filesystem::remove(path);
  }
}
