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
#include "rotflow/error.hpp"
#include "rotflow/invariants.hpp"

using namespace rotflow;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("full integrals at an equatorial state") {
  auto I = full_integrals(State{0, pi / 2, 0, 0, 1}, Omega{0});
  CHECK(std::abs(I.get("L1")) < 1e-16);
  CHECK(std::abs(I.get("L2")) < 1e-16);
  CHECK(I.get("L3") == doctest::Approx(1).epsilon(1e-15));
  CHECK(I.get("H") == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(I.get("Q")) < 1e-15);
  CHECK(std::abs(I.get("I1")) < 1e-15);
  CHECK(I.get("sigma") == 1);
}

TEST_CASE("full integral identities on random states") {
  const State s{0.7, 1.1, 0.4, 0.3, -0.2};
  auto I = full_integrals(s, Omega{0.5});
  const double L1 = I.get("L1"), L2 = I.get("L2"), L3 = I.get("L3"), H = I.get("H");
  CHECK(std::abs(L1 * L1 + L2 * L2 + L3 * L3 - 2 * H) < 1e-13);
  const double a = s.phi + 0.5 * s.t;
  CHECK(std::abs(std::cos(a) * L1 + std::sin(a) * L2 + L3 / std::tan(s.theta)) < 1e-13);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> th(0.05, 3.09), uv(-3, 3), ph(0, 2 * pi), tt(-5, 5);
  double w1 = 0, w2 = 0;
  for (int i = 0; i < 2000; ++i) {
    const State x{tt(rng), th(rng), ph(rng), uv(rng), uv(rng)};
    const double w = uv(rng);
    auto J = full_integrals(x, Omega{w});
    const double l1 = J.get("L1"), l2 = J.get("L2"), l3 = J.get("L3"), h = J.get("H");
    const double b = x.phi + w * x.t;
    w1 = std::max(w1, std::abs(l1 * l1 + l2 * l2 + l3 * l3 - 2 * h) / std::max(1.0, 2 * h));
    w2 = std::max(w2, std::abs(std::cos(b) * l1 + std::sin(b) * l2 + l3 / std::tan(x.theta)) /
                          std::max(1.0, 2 * h));
    if (x.u != 0) CHECK(J.get("K2") < 1);
  }
  CHECK(w1 < 1e-13);
  CHECK(w2 < 1e-12);
}

TEST_CASE("full integrals reject zero energy") {
  CHECK_THROWS_AS(full_integrals(State{0, 1, 0, 0, -1}, Omega{1}), Error);
}

TEST_CASE("coriolis integrals example") {
  auto I = coriolis_integrals(State{0, pi / 2, 0, 0.5, 0}, Omega{1});
  CHECK(I.get("H") == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(I.get("L3") == doctest::Approx(1).epsilon(1e-15));
  const double ap = I.get("A_plus"), am = I.get("A_minus");
  CHECK(std::abs(ap - (-0.25 + std::sqrt(1.0625)) / 2) < 1e-15);
  CHECK(std::abs(am - (-0.25 - std::sqrt(1.0625)) / 2) < 1e-15);
  CHECK(ap == doctest::Approx(0.39039).epsilon(1e-4));
  // roots of -w^2 y^2 + b y + c
  const double b = 2 - 2 * 0.125 - 2, c = 2 * 0.125 + 2 - 1 - 1;
  for (double y : {ap, am}) CHECK(std::abs(-y * y + b * y + c) < 1e-14);
}

TEST_CASE("coriolis positivity and omega = 0 agreement") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(0.05, 3.09), uv(-3, 3);
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const State s{0, th(rng), 0, uv(rng), uv(rng)};
    const double w = uv(rng);
    const double s2 = std::sin(s.theta) * std::sin(s.theta);
    const double H = 0.5 * (s.u * s.u + s2 * s.v * s.v), L3 = s2 * (s.v + w);
    if (!(H + 2 * w * L3 > -1e-12 * (1 + H))) ++bad;  // equality only at rest
  }
  CHECK(bad == 0);
  const State s{0, 1.0, 0.3, 0.4, 0.7};
  // The phase entries need omega != 0; H and L3 are the momenta.
  auto C = mechanics(s, Omega{0});
  auto F = full_integrals(s, Omega{0});
  CHECK(std::abs(C.E - F.get("H")) < 1e-15);
  CHECK(std::abs(C.p_phi - F.get("L3")) < 1e-15);
}

TEST_CASE("coriolis phase integrals along a trajectory") {
  for (double v0 : {0.1, 2.0}) {  // modulus below and above one
    CAPTURE(v0);
    const State s{0, 1.0, 0.2, 0.3, v0};
    auto tr = integrate(Regime::CORIOLIS, s, Omega{0.8}, 6, {1e-12, 1e-14});
    REQUIRE(tr.status == TrajectoryStatus::completed);
    auto d = invariant_drift(tr);
    CHECK(d.get("P").max_drift < 1e-7);
    CHECK(d.get("N").max_drift < 1e-7);
    CHECK(d.get("Hcan").max_drift < 1e-7);
  }
}

TEST_CASE("rapid integrals") {
  auto I = rapid_integrals(State{0, pi / 2, 0, 0, 0.1}, Omega{2});
  CHECK(I.get("I1") == doctest::Approx(-2).epsilon(1e-15));
  CHECK(I.get("I2") == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("big-omega limit of the full energy integral") {
  double prev = 1e300;
  for (double r : {1e-1, 1e-2, 1e-3}) {
    const double w = 3;
    const State s{0, 1.2, 0.1, 0.4, r * w};
    auto F = full_integrals(s, Omega{w});
    const double star = F.get("H") - w * F.get("L3");
    const double d = std::abs(star - rapid_integrals(s, Omega{w}).get("I1"));
    CHECK(d < prev);
    const double sn = std::sin(s.theta);
    CHECK(std::abs(d - 0.5 * s.v * s.v * sn * sn) < 1e-14);
    prev = d;
  }
}

TEST_CASE("rapid coriolis integrals") {
  auto I = rapid_coriolis_integrals(State{0, pi / 2, 0, 0, 0}, Omega{1.5});
  CHECK(I.get("I1") == doctest::Approx(-2.25).epsilon(1e-15));
  CHECK(std::abs(I.get("I2")) < 1e-16);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(0.2, 2.9), uv(-2, 2);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const State s{0, th(rng), 0, uv(rng), uv(rng)};
    const double w = uv(rng), sn = std::sin(s.theta);
    const double i1 = 0.5 * s.u * s.u - w * (s.v + w) * sn * sn;
    worst = std::max(worst, std::abs(coriolis_i1_star(s, Omega{w}) - i1 - 0.5 * s.v * s.v * sn * sn));
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("rapid coriolis phase integral along a trajectory") {
  const State s{0, 1.0, 0.2, 0.3, 0.1};
  auto tr = integrate(Regime::RAPID_CORIOLIS, s, Omega{0.9}, 5, {1e-12, 1e-14});
  REQUIRE(tr.status == TrajectoryStatus::completed);
  auto d = invariant_drift(tr);
  CHECK(d.get("I3").max_drift < 1e-6);
}

TEST_CASE("physical rapid integrals") {
  auto I = physical_rapid_integrals(State{0, pi / 2, 0, 0, 0.2}, Omega{1});
  CHECK(I.get("I1") == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(I.get("I2") == doctest::Approx(2.2).epsilon(1e-15));
  auto tr = integrate(Regime::PHYS_RAPID, State{0, 1.1, 0, 0.3, 0.2}, Omega{1}, 5);
  REQUIRE(tr.status == TrajectoryStatus::completed);
  auto d = invariant_drift(tr);
  CHECK(d.get("I1").max_drift < 1e-7);
  CHECK(d.get("I2").max_drift < 1e-7);
}

TEST_CASE("rapid and physical rapid right-hand sides differ by u v cot") {
  const double th = 0.9, u = 0.4, vt = 0.3, w = 1.3;
  auto P = force(Regime::PHYS_RAPID, th, u, vt, Omega{w});
  auto R = force(Regime::RAPID, th, u, vt / std::sin(th), Omega{w});
  // transported RAPID: d(v sin)/dt = F2 sin + v cos u
  const double transported = R.f2 * std::sin(th) + vt / std::sin(th) * std::cos(th) * u;
  const double diff = std::abs(transported - P.f2);
  CHECK(diff > 1e-3);
  CHECK(std::abs(diff - std::abs(u * vt / std::tan(th))) < 1e-14);
}

TEST_CASE("mechanics") {
  for (double th : {0.3, 1.5, 2.8}) {
    auto m = mechanics(State{0, th, 0, 0, 0}, Omega{1.7});
    CHECK(std::abs(m.E) < 1e-16);
    CHECK(std::abs(m.Hcan) < 1e-15);
  }
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> th(0.1, 3.0), uv(-2, 2);
  for (int i = 0; i < 100; ++i) {
    const State s{0, th(rng), 0, uv(rng), uv(rng)};
    const double w = uv(rng);
    auto m = mechanics(s, Omega{w});
    CHECK(std::abs(m.E - (m.p_theta * s.u + m.p_phi * s.v - m.L)) < 1e-14);
    CHECK(std::abs(m.E - coriolis_integrals(s, Omega{w}).get("H")) < 1e-14);
  }
  CHECK_THROWS_AS(mechanics(State{0, 0, 0, 1, 1}, Omega{1}), Error);
}

TEST_CASE("tracker keeps the full integrals continuous through turning points") {
  const State s{0, 1.0, 0.3, 0.5, 0.2};
  auto tr = integrate(Regime::FULL, s, Omega{0.6}, 20, {1e-12, 1e-14});
  REQUIRE(tr.status == TrajectoryStatus::completed);
  int turns = 0;
  for (size_t i = 1; i < tr.samples.size(); ++i)
    if (tr.samples[i].u * tr.samples[i - 1].u < 0) ++turns;
  CHECK(turns >= 2);
  auto d = invariant_drift(tr);
  CHECK(d.get("I1").max_drift < 1e-7);
  CHECK(d.get("I2").max_drift < 1e-7);
}
