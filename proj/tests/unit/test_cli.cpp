// Copyright 2026 The qdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catch2/catch_amalgamated.hpp"
#include "qdc/circuit.hpp"
#include "qdc/cli.hpp"

namespace qdc {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qdc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("classify", "[cli]") {
  SECTION("preset, analytic") {
    const auto r = run({"classify", "--preset", "xprime"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("0.729203") != std::string::npos);
    CHECK(r.out.find("0.629412") != std::string::npos);
    CHECK(r.out.find("-1") != std::string::npos);
  }
  SECTION("preset, sampled, json") {
    const auto r = run({"classify", "--preset", "xdoubleprime", "--shots",
                        "8192", "--seed", "7", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["seed"] == 7);
    CHECK(j["version"] == version_string());
    CHECK(j["config"]["shots"] == 8192);
    CHECK(std::abs(j["result"]["p_acc"].get<double>() - 0.913) < 0.02);
    CHECK(std::abs(j["result"]["p_class_minus"].get<double>() - 0.547) < 0.02);
    CHECK(j["result"]["predicted"] == -1);
  }
  SECTION("user vectors are normalised") {
    const auto r = run({"classify", "--input", "2,0", "--train", "1,0:-1",
                        "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("analytic,,,1.000000,1.000000,0.000000,-1") !=
          std::string::npos);
  }
  SECTION("usage errors") {
    CHECK(run({"classify", "--input", "0,0"}).code == kExitUsage);
    CHECK(run({"classify", "--input", "1,x"}).code == kExitUsage);
    CHECK(run({"classify", "--input", "1,"}).code == kExitUsage);
    CHECK(run({"classify"}).code == kExitUsage);
    CHECK(run({"classify", "--preset", "xprime", "--input", "1,0"}).code ==
          kExitUsage);
    CHECK(run({"classify", "--input", "1,0,0"}).code == kExitUsage);
    CHECK(run({"classify", "--input", "1,0", "--train", "1,0:2"}).code ==
          kExitUsage);
    CHECK(run({"classify", "--preset", "nope"}).code == kExitUsage);
  }
}

TEST_CASE("default seed", "[cli]") {
  SECTION("built-in default") {
    const auto r = run({"classify", "--preset", "xprime", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["seed"] == kDefaultSeed);
  }
  SECTION("environment override") {
    ScopedEnv env("QDC_SEED", "42");
    const auto r = run({"classify", "--preset", "xprime", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out)["seed"] == 42);
    const auto f = run({"classify", "--preset", "xprime", "--format", "json",
                        "--seed", "5"});
    CHECK(nlohmann::json::parse(f.out)["seed"] == 5);
  }
  SECTION("bad environment value") {
    ScopedEnv env("QDC_SEED", "forty-two");
    CHECK(run({"classify", "--preset", "xprime"}).code == kExitUsage);
  }
}

TEST_CASE("reproduce", "[cli]") {
  SECTION("table 1") {
    const auto r = run({"reproduce", "--table", "1"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out) == 5);
    CHECK(r.out.find("xprime,analytic,,0.729203,0.629412") != std::string::npos);
  }
  SECTION("table 2, reduced repetitions") {
    const auto r = run({"reproduce", "--table", "2", "--reps", "5", "--seed", "3"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out) == 7);
    CHECK(r.out.rfind(
              "dataset,reps,mean_error,variance,mean_p_acc,expected,tolerance,"
              "pass\n",
              0) == 0);
    CHECK(r.err.find("non-canonical") != std::string::npos);
    CHECK(r.out == run({"reproduce", "--table", "2", "--reps", "5", "--seed", "3"}).out);

    const auto j = run({"reproduce", "--table", "2", "--reps", "5", "--format",
                        "json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["canonical"] == false);
    CHECK(doc["rows"].size() == 6);
    CHECK(doc["config"]["reps"] == 5);
  }
  SECTION("usage errors") {
    CHECK(run({"reproduce", "--table", "3"}).code == kExitUsage);
    CHECK(run({"reproduce"}).code == kExitUsage);
    CHECK(run({"reproduce", "--table", "2", "--reps", "0"}).code == kExitUsage);
  }
}

TEST_CASE("verify-decompositions", "[cli]") {
  const auto ok = run({"verify-decompositions"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("no") == std::string::npos);
  CHECK(ok.out.find("gate count xprime") != std::string::npos);
  const auto bad = run({"verify-decompositions", "--inject-toffoli-fault",
                        "--format", "json"});
  CHECK(bad.code == kExitCheckFailed);
  const auto doc = nlohmann::json::parse(bad.out);
  CHECK(doc["pass"] == false);
  CHECK(doc["checks"][1]["check"] == "toffoli");
  CHECK(doc["checks"][1]["pass"] == false);
  CHECK(doc["checks"][2]["pass"] == true);
}

TEST_CASE("export-qasm", "[cli]") {
  const auto dir = std::filesystem::temp_directory_path() / "qdc_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.qasm";
  const auto r = run({"export-qasm", "--preset", "xdoubleprime", "-o",
                      path.string()});
  REQUIRE(r.code == kExitOk);
  const auto text = slurp(path);
  CHECK(text.rfind("OPENQASM 2.0;", 0) == 0);
  CHECK(text.find("ry(1.5177") != std::string::npos);
  const auto circuit = parse_qasm(text);
  CHECK(export_qasm(circuit) == text);
  CHECK(circuit.size() <= 80);

  CHECK(run({"export-qasm", "--preset", "xprime", "-o",
             (dir / "missing" / "x.qasm").string()})
            .code == kExitIo);
  CHECK(run({"export-qasm"}).code == kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("shots", "[cli]") {
  const auto w = run({"shots", "--eps", "0.01", "--z", "2.58", "--method",
                      "wald", "--format", "csv"});
  CHECK(w.code == kExitOk);
  CHECK(w.out.find(",16641,") != std::string::npos);
  const auto s = run({"shots", "--eps", "0.01", "--method", "wilson"});
  CHECK(s.out.find("16648") != std::string::npos);
  CHECK(run({"shots", "--eps", "0.6"}).code == kExitUsage);
  CHECK(run({"shots", "--eps", "0.1", "--z", "-1"}).code == kExitUsage);
  CHECK(run({"shots", "--eps", "0.1", "--method", "exact"}).code == kExitUsage);
}

TEST_CASE("top level", "[cli]") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const auto h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("reproduce") != std::string::npos);
  CHECK(h.out.find("inject") == std::string::npos);
}

}  // namespace qdc
