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

#include <cmath>
#include <algorithm>
#include <limits>
#include <sstream>

#include "rotflow/csv.hpp"
#include "rotflow/error.hpp"
#include "rotflow/hodograph.hpp"

using namespace rotflow;

namespace {

// Straight FNV-1a 64 for the oracle.
std::string fnv(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

TEST_CASE("config hash is FNV-1a 64") {
  CHECK(csv::config_hash("") == "cbf29ce484222325");
  CHECK(csv::config_hash("a") == "af63dc4c8601ec8c");
  CHECK(csv::config_hash("{\"command\":\"solve\"}") == fnv("{\"command\":\"solve\"}"));
  CHECK(csv::config_hash("x") != csv::config_hash("y"));
}

TEST_CASE("number format round-trips doubles") {
  for (double x : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, -1e-300, 4.9e-324}) {
    const std::string s = csv::format(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(csv::format(std::nan("")) == "nan");
  CHECK(csv::format(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(csv::format(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("table write and read") {
  csv::Table t({"a", "b"});
  t.add({1, 0.1});
  t.add({std::nan(""), -3});
  t.add_cells({"x", "2"});
  CHECK_THROWS_AS(t.add({1}), Error);
  CHECK_THROWS_AS(t.column("c"), Error);

  std::stringstream ss;
  t.write(ss, {"00ff", 7});
  std::string first, second;
  std::getline(ss, first);
  std::getline(ss, second);
  CHECK(first == "# rotflow config_hash=00ff seed=7");
  CHECK(second == "a,b");

  ss.clear();
  ss.seekg(0);
  auto r = csv::read(ss);
  REQUIRE(r.size() == 3);
  CHECK(r.columns() == t.columns());
  CHECK(r.number(0, 1) == 0.1);
  CHECK(std::isnan(r.number(1, 0)));
  CHECK(r.rows()[2][0] == "x");
  CHECK(r.column("b") == 1);
}

TEST_CASE("field table on the default grid matches the closed form") {
  auto f = make_angmom_field(AngmomSpec{}, Omega{1});
  csv::FieldGrid g;
  auto t = csv::field_table(*f, g);
  REQUIRE(t.size() == 128u * 128u);
  CHECK(t.columns() == std::vector<std::string>{"theta", "phi", "u", "v", "detM", "valid"});
  double worst = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double th = t.number(i, 0), ph = t.number(i, 1);
    REQUIRE(t.number(i, 5) == 1);
    worst = std::max(worst, std::abs(t.number(i, 2) - std::sin(ph)));
    worst = std::max(worst, std::abs(t.number(i, 3) - (2 * std::cos(ph) / std::sin(2 * th) - 1)));
    CHECK(std::isnan(t.number(i, 4)));
  }
  CHECK(worst <= 1e-12);
  CHECK(t.number(0, 0) == doctest::Approx(M_PI / 256));
  CHECK(t.number(1, 1) == doctest::Approx(2 * M_PI / 128));
}

TEST_CASE("trajectory table columns") {
  auto tr = integrate(Regime::FULL, State{0, 1.0, 0.2, 0.1, 0.3}, Omega{1}, 1.0);
  auto t = csv::trajectory_table(tr);
  REQUIRE(t.columns().size() >= 5);
  CHECK(t.columns()[0] == "t");
  CHECK(t.columns()[1] == "theta");
  CHECK(t.columns()[2] == "phi_unwrapped");
  CHECK(t.size() == tr.samples.size());
  CHECK(t.number(t.size() - 1, 0) == doctest::Approx(1.0));
  CHECK(std::find(t.columns().begin(), t.columns().end(), "H") != t.columns().end());
}

TEST_CASE("residual table") {
  auto f = make_angmom_field(AngmomSpec{}, Omega{1});
  auto t = csv::residual_table(*f, Regime::FULL, {{0.3, 0.7, 1.1}, {0, 0, 0}}, 1e-4);
  REQUIRE(t.size() == 2);
  CHECK(std::abs(t.number(0, 3)) < 1e-6);
  CHECK(std::abs(t.number(0, 4)) < 1e-6);
  CHECK(std::isnan(t.number(1, 3)));
}
