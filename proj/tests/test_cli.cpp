////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of rotflow                                              //
//                                                                            //
//  Copyright 2026 rotflow developers                                         //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path dir = fs::temp_directory_path() / ("rotflow_cli_" + std::to_string(::getpid()));

int sh(const std::string& args) {
  const std::string cmd = std::string("\"") + ROTFLOW_CLI_PATH + "\" " + args + " >" +
                          (dir / "stdout.txt").string() + " 2>" + (dir / "stderr.txt").string();
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

fs::path config(const std::string& name, const std::string& text) {
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

struct Cleanup {
  ~Cleanup() { fs::remove_all(dir); }
} cleanup;

}  // namespace

TEST_CASE("help and bad flags") {
  fs::create_directories(dir);
  CHECK(sh("--help") == 0);
  CHECK(slurp(dir / "stdout.txt").find("--config") != std::string::npos);
  CHECK(sh("") == 1);
  CHECK(sh("--config x.json --threads 0") == 1);
  CHECK(sh("--config x.json --frobnicate") == 1);
  CHECK(sh("--config " + (dir / "absent.json").string()) == 1);
}

TEST_CASE("solve writes a CSV with provenance") {
  auto cfg = config("solve.json", R"({"command": "solve", "omega": 1,
      "family": {"kind": "angmom_linear"}, "grid": {"n_theta": 6, "n_phi": 5}})");
  const fs::path out = dir / "out1";
  REQUIRE(sh("--config " + cfg.string() + " --out " + out.string() + " --seed 42") == 0);
  std::ifstream is(out / "field.csv");
  std::string l1, l2;
  std::getline(is, l1);
  std::getline(is, l2);
  CHECK(l1.rfind("# rotflow config_hash=", 0) == 0);
  CHECK(l1.find(" seed=42") != std::string::npos);
  CHECK(l2 == "theta,phi,u,v,detM,valid");
  int rows = 0;
  for (std::string l; std::getline(is, l);) ++rows;
  CHECK(rows == 30);
  CHECK(slurp(dir / "stdout.txt").find("wrote") != std::string::npos);

  REQUIRE(sh("--quiet --config " + cfg.string() + " --out " + (dir / "out2").string() +
             " --seed 42") == 0);
  CHECK(slurp(dir / "stdout.txt").empty());
  CHECK(slurp(out / "field.csv") == slurp(dir / "out2" / "field.csv"));
}

TEST_CASE("exit codes") {
  CHECK(sh("--quiet --config " +
           config("bad.json", R"({"command": "solve", "family": {"kind": "x"}})").string() +
           " --out " + dir.string()) == 1);
  CHECK(!slurp(dir / "stderr.txt").empty());

  CHECK(sh("--quiet --config " +
           config("pole.json", R"({"command": "integrate", "omega": 0,
               "state": {"theta": 0.5, "u": -1, "v": 0}, "t_end": 5})")
               .string() +
           " --out " + dir.string()) == 2);

  // A residual bound nobody can meet turns the run into a failure.
  CHECK(sh("--quiet --config " +
           config("tight.json", R"({"command": "residual", "omega": 1, "regime": "CORIOLIS",
               "family": {"kind": "angmom_linear"}, "points": {"count": 5}, "max_residual": 0})")
               .string() +
           " --out " + dir.string()) == 2);

  // verify-all of a quick criterion passes; exit 3 is reserved for failed criteria.
  CHECK(sh("--quiet --config " +
           config("verify.json", R"({"command": "verify-all", "criteria": [1]})").string() +
           " --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "report.json"));
}
