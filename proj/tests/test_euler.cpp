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
#include "rotflow/error.hpp"
#include "rotflow/euler.hpp"
#include "rotflow/field.hpp"
#include "rotflow/hodograph.hpp"

using namespace rotflow;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("force examples") {
  auto f = force(Regime::FULL, pi / 4, 1, 2, Omega{3});
  CHECK(std::abs(f.f1 - 12.5) < 1e-14);
  CHECK(std::abs(f.f2 + 10) < 1e-14);
  for (double th : {0.3, 1.0, 2.5}) {
    auto z = force(Regime::FULL, th, 0, -1.7, Omega{1.7});
    CHECK(z.f1 == 0);
    CHECK(z.f2 == 0);
  }
  auto r = force(Regime::RAPID, pi / 4, 1, 0, Omega{2});
  CHECK(std::abs(r.f1 - 2) < 1e-14);
  CHECK(std::abs(r.f2 + 4) < 1e-14);
}

TEST_CASE("force rejects the poles") {
  CHECK_THROWS_AS(force(Regime::FULL, 0, 1, 1, Omega{1}), Error);
  CHECK_THROWS_AS(force(Regime::CORIOLIS, pi, 1, 1, Omega{1}), Error);
}

TEST_CASE("regime names round trip") {
  for (auto r : {Regime::FULL, Regime::CORIOLIS, Regime::RAPID, Regime::RAPID_CORIOLIS,
                 Regime::PHYS_FULL, Regime::PHYS_CORIOLIS, Regime::PHYS_RAPID})
    CHECK(regime_from_name(regime_name(r)) == r);
  CHECK_THROWS_AS(regime_from_name("SLOW"), Error);
  CHECK(is_physical(Regime::PHYS_RAPID));
  CHECK(!is_physical(Regime::RAPID));
}

TEST_CASE("nonrotating force is the omega = 0 full force") {
  for (double th : {0.4, 1.3, 2.2}) {
    auto f = force(Regime::FULL, th, 0.7, -0.4, Omega{0});
    const double s = std::sin(th), c = std::cos(th);
    CHECK(f.f1 == doctest::Approx(s * c * 0.16).epsilon(1e-15));
    CHECK(f.f2 == doctest::Approx(-2 * c / s * 0.7 * -0.4).epsilon(1e-15));
  }
}

TEST_CASE("physical full force transports the coordinate force") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0.1, 3.0), uv(-2, 2);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const double theta = th(rng), u = uv(rng), v = uv(rng), w = uv(rng);
    const double s = std::sin(theta), c = std::cos(theta);
    auto F = force(Regime::FULL, theta, u, v, Omega{w});
    auto P = force(Regime::PHYS_FULL, theta, u, v * s, Omega{w});
    // d(v sin)/dt = F2 sin + v cos u
    worst = std::max({worst, std::abs(P.f1 - F.f1), std::abs(P.f2 - (F.f2 * s + v * c * u))});
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("phi rate by regime") {
  CHECK(phi_rate(Regime::FULL, 1.0, 0.4) == 0.4);
  CHECK(std::abs(phi_rate(Regime::PHYS_FULL, 1.0, 0.4) - 0.4 / std::sin(1.0)) < 1e-16);
}

TEST_CASE("reduced longitude and winding") {
  State s;
  s.phi = 2 * pi * 3 + 0.5;
  CHECK(s.winding() == 3);
  CHECK(std::abs(s.phi_reduced() - 0.5) < 1e-14);
  s.phi = -0.5;
  CHECK(s.winding() == -1);
  CHECK(std::abs(s.phi_reduced() - (2 * pi - 0.5)) < 1e-15);
}

TEST_CASE("residual of the rest field is exactly zero") {
  auto f = make_rest_field(Omega{1.3});
  auto res = pde_residual(*f, Regime::FULL, 0.2, 1.1, 6.2);
  CHECK(res.r1 == 0);
  CHECK(res.r2 == 0);
  // Not a solution of the Coriolis system: the centrifugal term is gone.
  auto c = pde_residual(*f, Regime::CORIOLIS, 0.2, 1.1, 6.2);
  CHECK(std::abs(c.r1 - 1.3 * 1.3 * std::sin(1.1) * std::cos(1.1)) < 1e-12);
}

TEST_CASE("residual detects a non-solution") {
  auto f = make_analytic_field("u_theta", Omega{1}, Regime::FULL,
                               [](double, double th, double) { return FieldValue{th, 0}; });
  const double th = pi / 3;
  auto r = pde_residual(*f, Regime::FULL, 0, th, 0.1, 1e-3);
  // u u_theta - sin cos (0 + 1)^2
  CHECK(std::abs(r.r1 - (th - std::sin(th) * std::cos(th))) < 1e-10);
}

TEST_CASE("residual of the stationary angular-momentum field") {
  auto f = make_angmom_field(AngmomSpec::basic(), Omega{1});
  auto r = pde_residual(*f, Regime::FULL, 0, pi / 3, 1, 1e-3);
  CHECK(std::abs(r.r1) < 1e-8);
  CHECK(std::abs(r.r2) < 1e-8);
}

TEST_CASE("residual converges at fourth order") {
  auto f = make_angmom_field(AngmomSpec::basic(), Omega{1});
  // A plain non-solution with curvature in every variable, so the error is
  // pure truncation.
  auto g = make_analytic_field("smooth", Omega{0.5}, Regime::FULL, [](double t, double th, double ph) {
    return FieldValue{std::sin(th + t) * std::cos(ph), std::cos(2 * th) + std::sin(ph - t)};
  });
  auto exact = [](double t, double th, double ph) {
    const double u = std::sin(th + t) * std::cos(ph), v = std::cos(2 * th) + std::sin(ph - t);
    const double ut = std::cos(th + t) * std::cos(ph), uth = ut, uph = -std::sin(th + t) * std::sin(ph);
    const double vt = -std::cos(ph - t), vth = -2 * std::sin(2 * th), vph = std::cos(ph - t);
    auto F = force(Regime::FULL, th, u, v, Omega{0.5});
    return Residual{ut + u * uth + v * uph - F.f1, vt + u * vth + v * vph - F.f2};
  };
  const double t = 0.3, th = 1.2, ph = 0.7;
  auto ex = exact(t, th, ph);
  auto e1 = pde_residual(*g, Regime::FULL, t, th, ph, 2e-2);
  auto e2 = pde_residual(*g, Regime::FULL, t, th, ph, 1e-2);
  const double ratio = std::abs(e1.r1 - ex.r1) / std::abs(e2.r1 - ex.r1);
  CHECK(ratio > 8);
  CHECK(ratio < 32);
  (void)f;
}

TEST_CASE("residual refuses a stencil leaving the domain") {
  auto f = make_angmom_field(AngmomSpec::basic(), Omega{1});
  CHECK_THROWS_AS(pde_residual(*f, Regime::FULL, 0, 1e-3, 1, 1e-3), Error);
}
