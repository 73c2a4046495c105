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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rotflow/characteristics.hpp"
#include "rotflow/elliptic.hpp"
#include "rotflow/error.hpp"
#include "rotflow/reduction.hpp"

using namespace rotflow;

namespace {
constexpr double pi = std::numbers::pi;

State random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(0.5, 2.6), uv(-0.6, 0.6), ph(0, 2 * pi);
  return State{0, th(rng), ph(rng), uv(rng), uv(rng)};
}
}  // namespace

TEST_CASE("v = -omega is a fixed point") {
  auto tr = integrate(Regime::FULL, State{0, 1, 0, 0, -2}, Omega{2}, 5);
  CHECK(tr.status == TrajectoryStatus::completed);
  const auto& b = tr.back();
  CHECK(b.t == doctest::Approx(5));
  CHECK(b.theta == 1);
  CHECK(b.u == 0);
  CHECK(std::abs(b.phi + 10) < 1e-12);
  auto d = invariant_drift(tr);
  CHECK(d.worst(InvariantKind::algebraic) < 1e-15);
}

TEST_CASE("equatorial circle without rotation") {
  auto tr = integrate(Regime::FULL, State{0, pi / 2, 0, 0, 0.3}, Omega{0}, 4);
  CHECK(std::abs(tr.back().theta - pi / 2) < 1e-15);
  CHECK(std::abs(tr.back().phi - 1.2) < 1e-12);
}

TEST_CASE("samples are strictly increasing in time") {
  std::mt19937_64 rng(3);
  auto tr = integrate(Regime::CORIOLIS, random_state(rng), Omega{0.8}, 3);
  for (size_t i = 1; i < tr.samples.size(); ++i) CHECK(tr.samples[i].t > tr.samples[i - 1].t);
}

TEST_CASE("full regime drift") {
  std::mt19937_64 rng(11);
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    auto tr = integrate(Regime::FULL, random_state(rng), Omega{0.7}, 10);
    if (tr.status != TrajectoryStatus::completed) continue;
    auto d = invariant_drift(tr);
    for (auto n : {"L1", "L2", "L3", "H"}) worst = std::max(worst, d.get(n).max_drift);
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("algebraic drift in every regime") {
  std::mt19937_64 rng(12);
  for (auto r : {Regime::CORIOLIS, Regime::RAPID, Regime::RAPID_CORIOLIS, Regime::PHYS_RAPID}) {
    CAPTURE(regime_name(r));
    double worst = 0;
    int done = 0;
    for (int i = 0; i < 8; ++i) {
      auto tr = integrate(r, random_state(rng), Omega{0.9}, 10);
      if (tr.status != TrajectoryStatus::completed) continue;
      ++done;
      worst = std::max(worst, invariant_drift(tr).worst(InvariantKind::algebraic));
    }
    CHECK(done > 0);
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("rapid elliptic invariants stay constant") {
  auto tr = integrate(Regime::RAPID, State{0, 1.0, 0.3, 0.4, 0.2}, Omega{1.2}, 5);
  REQUIRE(tr.status == TrajectoryStatus::completed);
  auto d = invariant_drift(tr);
  CHECK(d.get("I1").max_drift < 1e-8);
  CHECK(d.get("I2").max_drift < 1e-8);
  CHECK(d.worst(InvariantKind::transcendental) < 1e-6);
}

TEST_CASE("time reversal returns to the start") {
  std::mt19937_64 rng(5);
  for (auto r : {Regime::FULL, Regime::CORIOLIS, Regime::RAPID}) {
    const State s = random_state(rng);
    IntegrateOptions o;
    auto fw = integrate(r, s, Omega{0.6}, 4, o);
    if (fw.status != TrajectoryStatus::completed) continue;
    auto bw = integrate(r, fw.back(), Omega{0.6}, 0, o);
    const auto& e = bw.back();
    const double err = std::max({std::abs(e.theta - s.theta), std::abs(e.phi - s.phi),
                                 std::abs(e.u - s.u), std::abs(e.v - s.v)});
    CHECK(err < 10 * 1e-8);
  }
}

TEST_CASE("rapid coriolis energy balance") {
  IntegrateOptions o;
  o.aux = rapid_coriolis_energy_rate;
  const State s{0, 1.1, 0.2, 0.3, -0.2};
  auto tr = integrate(Regime::RAPID_CORIOLIS, s, Omega{0.8}, 8, o);
  REQUIRE(tr.aux.size() == tr.samples.size());
  double worst = 0;
  for (size_t i = 0; i < tr.samples.size(); ++i)
    worst = std::max(worst, std::abs(tr.samples[i].u * tr.samples[i].u + tr.aux[i] - s.u * s.u));
  CHECK(worst < 1e-7);
}

TEST_CASE("leaving the guard band is reported with the partial trajectory") {
  auto tr = integrate(Regime::FULL, State{0, 0.05, 0, -1, 0}, Omega{0}, 1);
  CHECK(tr.status == TrajectoryStatus::boundary_hit);
  CHECK(tr.samples.size() > 1);
  CHECK(tr.back().theta < 1e-5);
  CHECK_THROWS_AS(tr.require_complete(), Error);
}

TEST_CASE("pendulum characteristics reproduce the libration period") {
  for (double tm : {0.3, 0.8, 1.2}) {
    const double T = pendulum_period(tm, Omega{1.5});
    const double ref = 4 * elliptic::complete_k(std::sin(tm)) / 1.5;
    CHECK(std::abs(T - ref) / ref < 1e-6);
    CHECK(std::abs(pendulum_period_exact(tm, Omega{1.5}) - ref) < 1e-12);
  }
}
