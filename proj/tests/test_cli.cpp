// Copyright 2026 The qact Authors
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


#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "qact/cli.hpp"

using Json = nlohmann::json;
using qact::cli::dispatch;

namespace {

std::filesystem::path scratch_dir() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / "qact_cli_test";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

Json run_ok(const std::vector<std::string>& args, int expect_exit = 0) {
  const auto r = dispatch(args);
  CAPTURE(r.stdout_text);
  CAPTURE(r.stderr_text);
  CHECK(r.exit_code == expect_exit);
  return Json::parse(r.stdout_text);
}

}  // namespace

TEST_CASE("verify-table over the whole Table") {
  const Json out = run_ok({"verify-table", "--q", "2"});
  CHECK(out["pass"] == true);
  REQUIRE(out["entries"].size() == 20);
  for (const auto& e : out["entries"]) CHECK(e["pass"] == true);
  CHECK(out["distinctness"]["checks"].size() == 210);
  CHECK(out["corollary8"]["pass"] == true);
  CHECK(out["corollary9"]["pass"] == true);
  CHECK(out["rq_correspondence"]["pass"] == true);
}

TEST_CASE("single entry and parameters") {
  const Json out = run_ok({"verify-table", "--entry", "G5", "--param", "alpha=5", "--param", "gamma=7"});
  CHECK(out["entries"][0]["entry"] == "G5");
  CHECK(out["entries"][0]["params"]["alpha"]["re"] == "5");
  const Json bad = run_ok({"verify-table", "--entry", "S5", "--param", "alpha=2"}, 2);
  CHECK(bad["code"] == "ConstraintViolated");
}

TEST_CASE("b-space") {
  const std::string a = write_file(
      "a11_s1.json", R"({"n": 4, "rows": [["4","0","0","0"],["0","2","0","0"],["0","0","1","0"],["0","0","0","1"]]})");
  const Json out = run_ok({"b-space", "--matrix", a, "--q", "2"});
  CHECK(out["dim"] == 3);
  CHECK(out["square_nonzero"] == true);
  const std::vector<std::pair<int, int>> units{{0, 1}, {1, 2}, {1, 3}};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& rows = out["basis"][k]["rows"];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        CHECK(rows[r][c] == (r == units[k].first && c == units[k].second ? "1" : "0"));
  }
}

TEST_CASE("export, check-rep, invariants and equiv") {
  const std::string s1 = (scratch_dir() / "s1.json").string();
  const std::string s3 = (scratch_dir() / "s3.json").string();
  run_ok({"export", "--entry", "S1", "--out", s1});
  run_ok({"export", "--entry", "S3", "--out", s3});
  CHECK(run_ok({"check-rep", "--file", s1})["pass"] == true);
  CHECK(run_ok({"invariants", "--file", s1})["dim"] == 3);
  CHECK(run_ok({"invariants", "--entry", "S4a"})["dim"] == 1);
  const Json no = run_ok({"equiv", "--file1", s1, "--file2", s3});
  CHECK(no["equivalent"] == false);
  CHECK_FALSE(no.contains("u"));
  const Json yes = run_ok({"equiv", "--file1", s1, "--file2", s1});
  CHECK(yes["equivalent"] == true);
  CHECK(yes["alpha1"]["re"] == "1");

  Json rep = Json::parse(dispatch({"export", "--entry", "S1"}).stdout_text);
  rep["A22"]["rows"][1][0] = "1";
  const std::string broken = write_file("broken.json", rep.dump());
  CHECK(run_ok({"check-rep", "--file", broken}, 1)["pass"] == false);
}

TEST_CASE("show-entry and clifford-selftest") {
  const Json show = run_ok({"show-entry", "--entry", "G6", "--q", "2"});
  CHECK(show["det_q"]["rows"][0][1] == "20");
  CHECK(show["operator_algebra"]["dim"] == 7);
  CHECK(show["invariants"]["dim"] == 2);
  CHECK(run_ok({"clifford-selftest"})["pass"] == true);
}

TEST_CASE("input errors exit with code 2") {
  const std::string malformed = write_file("malformed.json", "{\"q\": \"2\", \"A11\": ");
  const Json parse = run_ok({"check-rep", "--file", malformed}, 2);
  CHECK(parse["code"] == "ParseError");
  CHECK(parse["position"].is_number());
  const std::string bad_scalar = write_file("bad_scalar.json", R"({"n": 1, "rows": [["1/x"]]})");
  const Json scalar = run_ok({"b-space", "--matrix", bad_scalar}, 2);
  CHECK(scalar["position"] == 2);
  CHECK(run_ok({"verify-table", "--q", "1"}, 2)["code"] == "InvalidQ");
  CHECK(run_ok({"verify-table", "--q", "-i"}, 2)["code"] == "InvalidQ");
  CHECK(run_ok({"show-entry", "--entry", "S8"}, 2)["code"] == "UnknownEntry");
  CHECK(run_ok({"show-entry"}, 2).contains("error"));
  CHECK(run_ok({}, 2).contains("error"));
  CHECK(run_ok({"check-rep", "--file", (scratch_dir() / "missing.json").string()}, 2)["code"] == "InvalidInput");
  CHECK(run_ok({"verify-table", "--param", "alpha"}, 2)["code"] == "InvalidInput");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"show-entry", "--entry", "S2a'", "--pretty"};
  CHECK(dispatch(args).stdout_text == dispatch(args).stdout_text);
  const std::vector<std::string> table{"verify-table", "--q", "1+i"};
  CHECK(dispatch(table).stdout_text == dispatch(table).stdout_text);
}
