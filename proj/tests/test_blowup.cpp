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
#include <set>

#include "doctest.h"
#include "rotflow/blowup.hpp"
#include "rotflow/elliptic.hpp"
#include "rotflow/error.hpp"
#include "rotflow/hodograph.hpp"
#include "rotflow/reduction.hpp"

using namespace rotflow;

namespace {
constexpr double pi = std::numbers::pi;

const Fn2 minus_u{Fn1::poly({0, -1}), Fn1::constant(0)};
const RootSearch wide{-1e12, 1e12};

// Phi(u, P) = -(1 + 0.3 cos P) u: the locus t = 1 + 0.3 cos(phi + w t)
// moves with phi.
double moving_condition(double t, double th, double ph, double w) {
  Fn2Callable P{[](double u, double p) { return -(1 + 0.3 * std::cos(p)) * u; },
                [](double, double p) { return -(1 + 0.3 * std::cos(p)); }};
  RootSearch s{-1e12, 1e12, 4000};
  return hopf_solve(P, Omega{w}, t, th, ph, s).condition;
}
}  // namespace

TEST_CASE("hopf locus is the plane t = 1") {
  Condition g = [](double t, double th, double ph) {
    return hopf_solve(minus_u, Omega{0.7}, t, th, ph, wide).condition;
  };
  ScanGrid grid{Axis{0.5, 1.5, 11}, Axis{0.3, 2.8, 6}, Axis{0, 2 * pi * 3 / 4, 4}};
  auto L = scan(g, grid, 1e-8, "hopf", 2);
  // Nodes at t = 1 exactly have no root and are counted, not dropped.
  CHECK(L.unsolved_nodes == 6 * 4);
  CHECK(L.total_nodes == 11 * 6 * 4);
  REQUIRE(L.points.size() == 6 * 4);
  for (const auto& p : L.points) {
    CHECK(std::abs(p.t - 1) < 1e-6);
    CHECK(std::abs(p.value) < 1e-8);
  }
  CHECK(!L.segments.empty());
  for (auto [a, b] : L.segments) {
    CHECK(a != b);
    CHECK(std::abs(L.points[a].t - L.points[b].t) < 1e-6);
  }
}

TEST_CASE("serial and threaded scans agree") {
  Condition g = [](double t, double th, double ph) { return moving_condition(t, th, ph, 0.5); };
  ScanGrid grid{Axis{0.5, 1.5, 9}, Axis{0.5, 2.5, 3}, Axis{0, 2 * pi * 7 / 8, 8}};
  auto a = scan(g, grid, 1e-8, "moving", 1);
  auto b = scan(g, grid, 1e-8, "moving", 4);
  REQUIRE(a.points.size() == b.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) CHECK(a.points[i].t == b.points[i].t);
}

TEST_CASE("refined points satisfy the condition and loci repeat after 2 pi") {
  const double w = 0.5;
  Condition g = [w](double t, double th, double ph) { return moving_condition(t, th, ph, w); };
  ScanGrid a{Axis{0.5, 1.5, 9}, Axis{1.0, 1.0, 1}, Axis{0, 2 * pi * 7 / 8, 8}};
  ScanGrid b = a;
  b.phi.lo += 2 * pi;
  b.phi.hi += 2 * pi;
  auto La = scan(g, a, 1e-9, "moving");
  auto Lb = scan(g, b, 1e-9, "moving");
  REQUIRE(La.points.size() >= 8);
  REQUIRE(La.points.size() == Lb.points.size());
  for (size_t i = 0; i < La.points.size(); ++i) {
    const auto& p = La.points[i];
    CHECK(std::abs(p.t - 1 - 0.3 * std::cos(p.phi + w * p.t)) < 1e-8);
    CHECK(std::abs(p.t - Lb.points[i].t) < 1e-9);
  }
}

TEST_CASE("scan with no solvable node") {
  Condition g = [](double, double, double) -> double { fail(ErrorCode::no_root, "never"); };
  ScanGrid grid{Axis{0, 1, 3}, Axis{0.5, 1, 3}, Axis{0, 0, 1}};
  try {
    scan(g, grid, 1e-8, "none");
    FAIL("expected empty_domain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_domain);
  }
}

TEST_CASE("constant family has no interior locus") {
  // dI1/du changes sign only where u does, which the family never reaches
  // away from the equator.
  const Omega w{1};
  Condition g = [w](double t, double th, double) {
    auto p = family_const(0, 0.3, -1, t, th, w);
    return family_const_di1_du(0.3, -1, th, p.W);
  };
  ScanGrid grid{Axis{0.5, 1.5, 6}, Axis{0.35, 1.4, 12}, Axis{0, 0, 1}};
  auto L = scan(g, grid, 1e-8, "const");
  CHECK(L.points.empty());
  CHECK(L.unsolved_nodes < L.total_nodes);
}

TEST_CASE("constant family condition matches a difference quotient") {
  const Omega w{1};
  const double c2 = 0.3, th = 0.8, t = 1.1;
  auto p = family_const(0, c2, -1, t, th, w);
  auto P = HodographProblem::simple(w, -1, {0, 0, 0}, {c2, 0, 0});
  const double h = 1e-6;
  const double fd = (P.residual(t, th, 0, p.u + h, p.v)[0] - P.residual(t, th, 0, p.u - h, p.v)[0]) /
                    (2 * h);
  CHECK(std::abs(family_const_di1_du(c2, -1, th, p.W) - fd) < 1e-6);
}

TEST_CASE("hopf derivative growth near the locus") {
  auto f = make_hopf_field(minus_u, Omega{0.7}, wide);
  auto rep = derivative_growth_probe(*f, 1, 1.2, 0.4, {1e-2, 1e-3, 1e-4});
  CHECK(rep.monotone);
  for (const auto& s : rep.samples) CHECK(std::abs(s.derivative * s.distance - 1) < 0.01);
}

TEST_CASE("smooth interior point has bounded derivatives") {
  Fn2 plus{Fn1::poly({0, 1}), Fn1::constant(0)};
  auto f = make_hopf_field(plus, Omega{0.7});
  // u = theta / (1 + t); probing towards t0 = 2 never blows up.
  auto a = derivative_growth_probe(*f, 2, 1.0, 0.0, {1e-1, 1e-2, 1e-3}, 1e-2);
  auto b = derivative_growth_probe(*f, 2, 1.0, 0.0, {1e-1, 1e-2, 1e-3}, 1e-4);
  for (size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].derivative < 1);
    CHECK(std::abs(a.samples[i].derivative - b.samples[i].derivative) < 1e-8);
    CHECK(std::abs(a.samples[i].derivative - 1 / (3 - a.samples[i].distance)) < 1e-8);
  }
}

TEST_CASE("linear family branch derivatives grow like an inverse square root") {
  // Without rotation alpha and beta depend on (theta, phi) only; the locus
  // is t0 = -2 sqrt(alpha beta), approached from t < t0.
  const LinearCoeffs k{0.1, 0.05, 0.1, 0.1, 0};
  const Omega w{0};
  const double th = 1.0;
  double ph = -1;
  for (double p = 0; p < 2 * pi; p += 0.05) {
    auto q = family_linear(k, 1, -10, th, p, w);
    if (q.alpha * q.beta > 1e-3) {
      ph = p;
      break;
    }
  }
  REQUIRE(ph >= 0);
  auto q = family_linear(k, 1, -10, th, ph, w);
  const double t0 = -2 * std::sqrt(q.alpha * q.beta);
  auto f = make_linear_field(k, 1, w);
  auto rep = derivative_growth_probe(*f, t0, th, ph, {1e-5, 1e-6, 1e-7}, 1e-4);
  CHECK(rep.monotone);
  // derivative * sqrt(d) tends to a constant
  const double c0 = rep.samples[0].derivative * std::sqrt(rep.samples[0].distance);
  const double c2 = rep.samples[2].derivative * std::sqrt(rep.samples[2].distance);
  CHECK(std::abs(c2 / c0 - 1) < 0.01);
}

TEST_CASE("modulus blow-up is the fold of the smallest root") {
  // k F(theta, k) - k^2 = t.  Its left side has a local maximum where the
  // condition F + k dF/dk - 2k vanishes; past that time the smallest root
  // jumps to the far branch.
  const double th = 1.0;
  Fn2Callable P{[](double k, double) { return k * k; }, [](double k, double) { return 2 * k; }};
  auto f = [&](double k) { return k * elliptic::ellint_f(th, k).value - k * k; };
  double kl = 0.1, kh = 0.7;
  for (int i = 0; i < 200; ++i) {
    const double m1 = kl + (kh - kl) / 3, m2 = kh - (kh - kl) / 3;
    if (f(m1) < f(m2))
      kl = m1;
    else
      kh = m2;
  }
  const double kfold = 0.5 * (kl + kh), tstar = f(kfold);
  double prev = 1e300;
  for (double d : {1e-2, 1e-4, 1e-6}) {
    auto r = modulus_solve(P, Omega{1}, tstar - d, th, 0);
    CHECK(r.value < kfold);
    CHECK(r.condition > 0);
    CHECK(r.condition < prev);
    CHECK(r.condition / std::sqrt(d) < 10);  // square-root approach
    prev = r.condition;
  }
  CHECK(prev < 1e-2);
  auto past = modulus_solve(P, Omega{1}, tstar + 1e-3, th, 0);
  CHECK(past.value > kfold + 0.1);
}
