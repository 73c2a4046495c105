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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rotflow/csv.hpp"
#include "rotflow/runner.hpp"

using namespace rotflow;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path p;
  explicit TempDir(const std::string& tag) {
    p = fs::temp_directory_path() / ("rotflow_runner_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
  }
  ~TempDir() { fs::remove_all(p); }
};

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

runner::RunResult go(const std::string& cfg, const fs::path& dir, std::uint64_t seed = 7) {
  runner::RunOptions o;
  o.out_dir = dir.string();
  o.seed = seed;
  o.quiet = true;
  std::ostringstream log;
  return runner::run_text(cfg, o, log);
}

}  // namespace

TEST_CASE("config errors exit 1") {
  TempDir d("cfg");
  CHECK(go("{not json", d.p).exit_code == runner::config_error);
  CHECK(go("[]", d.p).exit_code == runner::config_error);
  CHECK(go(R"({"command": "dance"})", d.p).exit_code == runner::config_error);
  CHECK(go(R"({"command": "integrate", "state": {"theta": 1, "u": 0, "v": 0}, "bogus": 1})", d.p)
            .exit_code == runner::config_error);
  CHECK(go(R"({"command": "integrate", "regime": "SIDEWAYS", "state": {"theta": 1, "u": 0, "v": 0}})",
           d.p)
            .exit_code == runner::config_error);
  CHECK(go(R"({"command": "solve", "family": {"kind": "const", "sigma": 2}})", d.p).exit_code ==
        runner::config_error);
  CHECK(go(R"({"command": "verify-all", "criteria": [11]})", d.p).exit_code ==
        runner::config_error);
  auto r = go(R"({"command": "solve", "family": {"kind": "angmom_linear", "c": 1}})", d.p);
  CHECK(r.exit_code == runner::config_error);
  CHECK(r.message.find("'c'") != std::string::npos);

  runner::RunOptions o;
  o.quiet = true;
  std::ostringstream log;
  CHECK(runner::run_file((d.p / "missing.json").string(), o, log).exit_code ==
        runner::config_error);
}

TEST_CASE("integrate writes a trajectory") {
  TempDir d("int");
  auto r = go(R"({"command": "integrate", "regime": "FULL", "omega": 1,
                  "state": {"theta": 1.0, "phi": 0.2, "u": 0.1, "v": 0.3}, "t_end": 2})",
              d.p);
  REQUIRE(r.exit_code == runner::ok);
  REQUIRE(r.outputs.size() == 1);
  std::ifstream is(r.outputs[0]);
  auto t = csv::read(is);
  CHECK(t.number(t.size() - 1, 0) == doctest::Approx(2.0));
}

TEST_CASE("boundary hit exits 2") {
  TempDir d("bnd");
  // Heads straight for the north pole.
  auto r = go(R"({"command": "integrate", "regime": "FULL", "omega": 0,
                  "state": {"theta": 0.5, "u": -1, "v": 0}, "t_end": 5})",
              d.p);
  CHECK(r.exit_code == runner::numerical_failure);
  CHECK(r.outputs.size() == 1);
}

TEST_CASE("residual threshold exits 2 when exceeded") {
  TempDir d("res");
  const std::string fam = R"("family": {"kind": "angmom_linear", "a1": 1},
      "points": {"count": 20, "theta": [0.3, 1.2]})";
  CHECK(go(R"({"command": "residual", "omega": 1, "max_residual": 1e-6, )" + fam + "}", d.p)
            .exit_code == runner::ok);
  // The same field checked against the wrong equations.
  CHECK(go(R"({"command": "residual", "omega": 1, "regime": "CORIOLIS", "max_residual": 1e-6, )" +
               fam + "}",
           d.p)
            .exit_code == runner::numerical_failure);
}

TEST_CASE("same config and seed give byte-identical output") {
  TempDir a("detA"), b("detB");
  const std::string cfg = R"({"command": "integrate", "regime": "CORIOLIS", "omega": 0.7,
                              "random_states": 3, "t_end": 1.5})";
  auto ra = go(cfg, a.p, 11), rb = go(cfg, b.p, 11);
  REQUIRE(ra.exit_code == runner::ok);
  REQUIRE(ra.outputs.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(slurp(ra.outputs[i]) == slurp(rb.outputs[i]));
  auto rc = go(cfg, b.p, 12);
  CHECK(slurp(ra.outputs[0]) != slurp(rc.outputs[0]));
}

TEST_CASE("solve, blowup, transform and invariants run") {
  TempDir d("cmds");
  auto s = go(R"({"command": "solve", "omega": 1, "family": {"kind": "angmom_linear"},
                  "grid": {"n_theta": 8, "n_phi": 4}})",
              d.p);
  REQUIRE(s.exit_code == runner::ok);
  {
    std::ifstream is(s.outputs[0]);
    auto t = csv::read(is);
    CHECK(t.size() == 32);
    CHECK(!std::isnan(t.number(0, t.column("detM"))));
  }

  auto m = go(R"({"command": "solve", "omega": 1,
                  "family": {"kind": "modulus", "Phi": {"first": {"kind": "poly", "coeffs": [0, 0, 1]}}},
                  "grid": {"t": 0.1, "n_theta": 4, "n_phi": 2}})",
              d.p);
  CHECK(m.exit_code == runner::ok);

  auto b = go(R"({"command": "blowup", "omega": 1, "threads": 2,
                  "condition": {"kind": "hopf", "Phi": {"first": {"kind": "poly", "coeffs": [0, -1]}}}})",
              d.p);
  CHECK(b.exit_code == runner::config_error);  // threads is a run option, not a config key
  b = go(R"({"command": "blowup", "omega": 1,
             "condition": {"kind": "hopf", "Phi": {"first": {"kind": "poly", "coeffs": [0, -1]}}},
             "grid": {"t": [0, 2, 11], "theta": [0.5, 2.5, 5], "phi": [0, 0, 1]}})",
        d.p);
  REQUIRE(b.exit_code == runner::ok);
  {
    std::ifstream is(b.outputs[0]);
    auto t = csv::read(is);
    CHECK(t.columns() ==
          std::vector<std::string>{"t", "theta", "phi", "condition_value", "condition_name"});
  }

  auto tr = go(R"({"command": "transform", "omega": 1, "family": {"kind": "angmom_linear"},
                   "map": "to_nonrotating", "grid": {"n_theta": 4, "n_phi": 4}})",
               d.p);
  CHECK(tr.exit_code == runner::ok);
  CHECK(go(R"({"command": "transform", "family": {"kind": "angmom_linear"}, "map": "sideways"})",
           d.p)
            .exit_code == runner::config_error);

  auto inv = go(R"({"command": "invariants", "regime": "FULL", "omega": 1,
                    "states": [{"theta": 1, "u": 0.1, "v": 0.2}, {"theta": 2, "phi": 1, "u": -0.3, "v": 0}]})",
                d.p);
  REQUIRE(inv.exit_code == runner::ok);
  std::ifstream is(inv.outputs[0]);
  auto t = csv::read(is);
  CHECK(t.size() == 2);
  CHECK_NOTHROW(t.column("H"));
}

TEST_CASE("family_field builds fields from descriptors") {
  auto f = runner::family_field(nlohmann::json::parse(R"({"kind": "angmom_linear", "a1": 1, "b2": 0.5})"),
                                Omega{1});
  auto a = f->eval(0, 1.2, 0.4);
  CHECK(std::isfinite(a.u));
  CHECK_THROWS(runner::family_field(nlohmann::json::parse(R"({"kind": "nope"})"), Omega{1}));
}
