// Copyright 2026 The hpaqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hpaqc/serialization.hpp"

namespace fs = std::filesystem;
using hpaqc::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hpaqc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hpaqc_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

Json load(const std::string& path) { return Json::parse(hpaqc::read_text_file(path)); }

}  // namespace

TEST_CASE("build writes the HPPH Hamiltonian and a manifest") {
  TempDir dir;
  const auto out = dir / "hpph.json";
  const auto r = run({"build", "--sequence", "HPPH", "--dim", "2", "--out", out});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("residue 4 axis 1: q5 q6 (from q13 q14)") != std::string::npos);
  const auto doc = load(out);
  CHECK(doc.at("n_vars") == 8);
  CHECK(doc.at("metadata").at("degree") == 8);
  CHECK(doc.at("terms").size() == 256);
  CHECK(doc.at("metadata").at("blocks") == Json::parse("[[1,2,3,4],[5,6,7,8]]"));
  const auto manifest = load(out + ".manifest.json");
  CHECK(manifest.at("command") == "build");
  CHECK(manifest.at("outputs").at(out) == hpaqc::fnv1a_hex(hpaqc::read_text_file(out)));
  CHECK(manifest.contains("timestamp"));
  CHECK(manifest.contains("version"));
}

TEST_CASE("outputs are byte-identical across runs") {
  TempDir dir;
  for (int pass = 0; pass < 2; ++pass) {
    const auto tag = std::to_string(pass);
    REQUIRE(run({"build", "--sequence", "HPPH", "--out", dir / ("h" + tag + ".json")}).code == 0);
    REQUIRE(run({"reduce", "--in", dir / ("h" + tag + ".json"), "--out", dir / ("r" + tag + ".json"),
                 "--ledger", dir / ("l" + tag + ".json")}).code == 0);
    REQUIRE(run({"spectrum", "--in", dir / ("h" + tag + ".json"), "--points", "11", "--out",
                 dir / ("s" + tag + ".csv"), "--snapshots", dir / ("p" + tag + ".csv"), "--summary",
                 dir / ("m" + tag + ".json")}).code == 0);
    REQUIRE(run({"enumerate", "--sequence", "HPHPPHHPH", "--out", dir / ("e" + tag + ".json")}).code == 0);
    REQUIRE(run({"count", "--sequence", "HPPH", "--out", dir / ("c" + tag + ".json")}).code == 0);
  }
  for (const auto& name : {"h%.json", "r%.json", "l%.json", "s%.csv", "p%.csv", "m%.json", "e%.json", "c%.json"}) {
    std::string a(name), b(name);
    a.replace(a.find('%'), 1, "0");
    b.replace(b.find('%'), 1, "1");
    CHECK_MESSAGE(hpaqc::read_text_file(dir / a) == hpaqc::read_text_file(dir / b), name);
  }
}

TEST_CASE("toy preset reduces to the expected ledger") {
  TempDir dir;
  const auto r = run({"reduce", "--preset", "toy", "--delta", "5", "--out", dir / "r.json", "--ledger",
                      dir / "l.json", "--verify"});
  REQUIRE(r.code == 0);
  CHECK(load(dir / "l.json") == Json::parse(R"([{"a":1,"b":2,"ancilla":5},{"a":3,"b":4,"ancilla":6}])"));
  const auto doc = load(dir / "r.json");
  CHECK(doc.at("n_vars") == 6);
  CHECK(doc.at("metadata").at("delta") == 5);
  CHECK(doc.at("metadata").at("verification").at("passed") == true);
}

TEST_CASE("spectrum CSV shape") {
  TempDir dir;
  REQUIRE(run({"build", "--sequence", "HPPH", "--out", dir / "h.json"}).code == 0);
  REQUIRE(run({"spectrum", "--in", dir / "h.json", "--points", "101", "--levels", "15", "--out",
               dir / "t.csv"}).code == 0);
  std::istringstream csv(hpaqc::read_text_file(dir / "t.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line.rfind("s,E0,", 0) == 0);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 15);
  }
  CHECK(rows == 101);
}

TEST_CASE("instance files and count reports") {
  TempDir dir;
  hpaqc::write_text_file(dir / "inst.json", R"({"sequence": "HPPH", "dimension": 2})");
  REQUIRE(run({"count", "--instance", dir / "inst.json", "--quadratize", "--out", dir / "c.json"}).code == 0);
  const auto doc = load(dir / "c.json");
  CHECK(doc.at("total_qubits") == 30);
  CHECK(doc.at("empirical_ancillas") == 22);
  CHECK(doc.at("within_bound") == true);
  CHECK(doc.at("deviations").empty());
  const auto manifest = load(dir / "c.json.manifest.json");
  CHECK(manifest.at("inputs").contains(dir / "inst.json"));

  REQUIRE(run({"count", "--sequence", "HPPHHPPHHPPHHPPH", "--out", dir / "big.json"}).code == 0);
  CHECK(load(dir / "big.json").at("total_qubits") == 14 * 255);
}

TEST_CASE("errors exit with code 2 and a JSON message") {
  TempDir dir;
  const auto bad_flag = run({"build", "--sequence", "HPPH", "--bogus", "--out", dir / "x.json"});
  CHECK(bad_flag.code == 2);
  CHECK(Json::parse(bad_flag.err).at("error").at("kind") == "usage");

  const auto missing = run({"reduce", "--in", dir / "missing.json", "--out", dir / "x.json"});
  CHECK(missing.code == 2);
  CHECK(Json::parse(missing.err).at("error").at("kind") == "io");

  const auto bad_seq = run({"build", "--sequence", "HPH", "--out", dir / "x.json"});
  CHECK(bad_seq.code == 2);
  CHECK(Json::parse(bad_seq.err).at("error").contains("message"));

  const auto weights = run({"build", "--sequence", "HPPH", "--lambda0", "3", "--lambda1", "4", "--out", dir / "x.json"});
  CHECK(weights.code == 2);

  const auto too_long = run({"enumerate", "--sequence", std::string(17, 'H'), "--out", dir / "x.json"});
  CHECK(too_long.code == 2);
  CHECK(Json::parse(too_long.err).at("error").at("kind") == "limit_exceeded");

  const auto levels = run({"spectrum", "--preset", "toy", "--levels", "17", "--out", dir / "x.csv"});
  CHECK(levels.code == 2);

  const auto solver = run({"spectrum", "--preset", "toy", "--solver", "lapack", "--out", dir / "x.csv"});
  CHECK(solver.code == 2);

  const auto both = run({"spectrum", "--preset", "toy", "--in", dir / "h.json", "--out", dir / "x.csv"});
  CHECK(both.code == 2);

  CHECK(run({}).code == 2);
  CHECK_FALSE(fs::exists(dir / "x.json"));
}

TEST_CASE("help and version") {
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("spectrum") != std::string::npos);
  const auto version = run({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find(hpaqc::cli::kVersion) != std::string::npos);
}
