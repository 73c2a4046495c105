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
#include "rotflow/hodograph.hpp"
#include "rotflow/reduction.hpp"
#include "rotflow/transforms.hpp"

using namespace rotflow;

namespace {
constexpr double pi = std::numbers::pi;
const FrameMap to_nr{FrameMap::Direction::to_nonrotating, Omega{1}};
const FrameMap to_r{FrameMap::Direction::to_rotating, Omega{1}};

FieldPtr nonrotating(FieldPtr f) {
  auto s = std::make_shared<SolutionField>(*f);
  s->frame = Frame::nonrotating;
  return s;
}

// Stationary RAPID solution: u^2 = w^2 s^2 + c, v = a - 2 w log s.
FieldPtr rapid_stationary(double w) {
  return make_analytic_field("rapid_stationary", Omega{w}, Regime::RAPID,
                             [w](double, double th, double) {
                               const double s = std::sin(th);
                               return FieldValue{std::sqrt(w * w * s * s + 0.3),
                                                 0.4 - 2 * w * std::log(s)};
                             });
}
}  // namespace

TEST_CASE("physical map on states") {
  auto p = physical_map(PhysicalDirection::to_physical, State{0, pi / 6, 0, 0.3, 0.4});
  CHECK(p.u == 0.3);
  CHECK(std::abs(p.v - 0.2) < 1e-16);
  auto b = physical_map(PhysicalDirection::to_coordinate, p);
  CHECK(std::abs(b.v - 0.4) < 1e-16);
  CHECK_THROWS_AS(physical_map(PhysicalDirection::to_coordinate, State{0, 0, 0, 1, 1}), Error);
}

TEST_CASE("rotating field maps to the stationary nonrotating one") {
  auto ref_angmom = make_angmom_field(AngmomSpec::basic(), Omega{1});
  auto nr = map_field(to_nr, ref_angmom);
  CHECK(nr->frame == Frame::nonrotating);
  for (double t : {0.0, 0.7, 3.0})
    for (double th : {0.4, 1.2})
      for (double ph : {0.2, 2.2}) {
        auto a = nr->eval(t, th, ph);
        CHECK(std::abs(a.u - std::sin(ph)) < 1e-13);
        CHECK(std::abs(a.v - 2 * std::cos(ph) / std::sin(2 * th)) < 1e-12);
      }
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> T(0, 2), TH(0.2, 1.4), PH(0, 2 * pi);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    auto r = pde_residual(*nr, Regime::FULL, T(rng), TH(rng), PH(rng), 1e-4);
    worst = std::max({worst, std::abs(r.r1), std::abs(r.r2)});
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("frame maps round trip and refuse double application") {
  auto ref_angmom = make_angmom_field(AngmomSpec::basic(), Omega{1});
  auto nr = map_field(to_nr, ref_angmom);
  auto back = map_field(to_r, nr);
  CHECK(back.get() == ref_angmom.get());
  CHECK_THROWS_AS(map_field(to_r, ref_angmom), Error);
  CHECK_THROWS_AS(map_field(to_nr, nr), Error);

  auto still = nonrotating(make_analytic_field(
      "sample", Omega{0}, Regime::FULL, [](double t, double th, double ph) {
        return FieldValue{std::sin(ph + t) * std::sin(th), std::cos(ph)};
      }));
  auto rot = map_field(to_r, still);
  auto rt = map_field(to_nr, rot);
  // A map with a different omega is not the inverse: values go the long way.
  auto other = map_field(FrameMap{FrameMap::Direction::to_nonrotating, Omega{1}}, rot);
  for (double t : {0.0, 1.5})
    for (double ph : {0.1, 5.0}) {
      auto a = still->eval(t, 1.0, ph), b = rt->eval(t, 1.0, ph), c = other->eval(t, 1.0, ph);
      CHECK(a.u == b.u);
      CHECK(a.v == b.v);
      CHECK(std::abs(a.u - c.u) < 1e-15);
      CHECK(std::abs(a.v - c.v) < 1e-15);
    }
}

TEST_CASE("constant L3 solution in the nonrotating frame") {
  const double A = 4, w = 0.8;
  auto f = make_constant_L3_field(A, Omega{w}, 1);
  auto nr = map_field(FrameMap{FrameMap::Direction::to_nonrotating, Omega{w}}, f);
  for (double th : {0.7, 1.3, 2.2}) {
    const double s = std::sin(th);
    auto a = nr->eval(0.3, th, 1.0);
    CHECK(std::abs(a.u - std::sqrt(A - w * w / (s * s))) < 1e-14);
    CHECK(std::abs(a.v - w / (s * s)) < 1e-14);
    // The formal omega -> 0 limit is (sqrt A, 0); the transported field is not.
    auto lim = constant_L3_solution(A, Omega{0}, th, 1);
    CHECK(std::abs(lim.u - std::sqrt(A)) < 1e-15);
    CHECK(std::abs(a.v - lim.v) > 0.5);
  }
}

TEST_CASE("phi independent shift") {
  auto zero = nonrotating(make_analytic_field("zero", Omega{0}, Regime::FULL,
                                              [](double, double, double) { return FieldValue{0, 0}; }));
  const FrameMap m{FrameMap::Direction::to_rotating, Omega{1.3}};
  auto r = phi_independent_shift(m, zero);
  auto a = r->eval(0.2, 1.0, 0.4);
  CHECK(a.u == 0);
  CHECK(a.v == -1.3);
  CHECK(r->frame == Frame::rotating);
  auto back = phi_independent_shift(FrameMap{FrameMap::Direction::to_nonrotating, Omega{1.3}}, r);
  CHECK(back->eval(0.2, 1.0, 0.4).v == 0);
  auto ref_angmom = make_angmom_field(AngmomSpec::basic(), Omega{1});
  try {
    phi_independent_shift(to_nr, ref_angmom);
    FAIL("expected not_phi_independent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_phi_independent);
  }
}

TEST_CASE("periodicity in time") {
  const Omega w{1.4};
  CHECK(periodicity_check(*make_angmom_field(AngmomSpec::basic(), w), w) < 1e-12);
  CHECK(periodicity_check(*make_rest_field(w), w) == 0);
  // Rotating view of a stationary 2 pi periodic nonrotating field.
  auto still = nonrotating(make_analytic_field(
      "sample", Omega{0}, Regime::FULL, [](double, double th, double ph) {
        return FieldValue{std::cos(ph) * std::sin(th), std::sin(2 * ph)};
      }));
  auto rot = map_field(FrameMap{FrameMap::Direction::to_rotating, w}, still);
  CHECK(periodicity_check(*rot, w) < 1e-12);
  CHECK(phi_periodicity_check(*rot) < 1e-12);
}

TEST_CASE("physical map conjugates the full characteristic system") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> TH(0.6, 2.5), UV(-0.5, 0.5), PH(0, 2 * pi);
  IntegrateOptions o;
  o.rel_tol = 1e-12;
  o.abs_tol = 1e-14;
  for (int i = 0; i < 5; ++i) {
    const State s{0, TH(rng), PH(rng), UV(rng), UV(rng)};
    auto a = integrate(Regime::FULL, s, Omega{0.7}, 5, o);
    auto b = integrate(Regime::PHYS_FULL, physical_map(PhysicalDirection::to_physical, s),
                       Omega{0.7}, 5, o);
    if (a.status != TrajectoryStatus::completed || b.status != TrajectoryStatus::completed) continue;
    auto ma = physical_map(PhysicalDirection::to_physical, a.back());
    const auto& e = b.back();
    CHECK(std::max({std::abs(ma.theta - e.theta), std::abs(ma.phi - e.phi), std::abs(ma.u - e.u),
                    std::abs(ma.v - e.v)}) < 1e-7);
  }
}

TEST_CASE("coriolis solutions transport to the physical system") {
  auto f = make_stationary_coriolis_field(Fn1::cosine(1, 1, 2, 0), Omega{1}, 1);
  auto p = physical_map(PhysicalDirection::to_physical, f);
  CHECK(p->regime == Regime::PHYS_CORIOLIS);
  CHECK(p->velocity == VelocityKind::physical);
  double worst = 0;
  for (double th : {0.3, 0.5, 2.6})
    for (double ph : {0.0, 0.4, 3.0}) {
      auto r = pde_residual(*p, Regime::PHYS_CORIOLIS, 0.2, th, ph, 1e-4);
      worst = std::max({worst, std::abs(r.r1), std::abs(r.r2)});
    }
  CHECK(worst < 1e-6);
  auto back = physical_map(PhysicalDirection::to_coordinate, p);
  CHECK(back.get() == f.get());
}

TEST_CASE("rapid solutions do not transport to the physical rapid system") {
  const double w = 0.9;
  auto f = rapid_stationary(w);
  auto r0 = pde_residual(*f, Regime::RAPID, 0, 1.0, 0.5, 1e-4);
  CHECK(std::max(std::abs(r0.r1), std::abs(r0.r2)) < 1e-6);
  auto p = physical_map(PhysicalDirection::to_physical, f);
  CHECK(p->regime == Regime::PHYS_RAPID);
  for (double th : {0.5, 1.0, 2.2}) {
    auto r = pde_residual(*p, Regime::PHYS_RAPID, 0, th, 0.5, 1e-4);
    auto a = p->eval(0, th, 0.5);
    const double expect = a.u * a.v / std::tan(th);
    CHECK(std::abs(r.r1) < 1e-6);
    CHECK(std::abs(std::abs(r.r2) - std::abs(expect)) < 1e-8);
    CHECK(std::abs(r.r2) > 1e-3);
  }
}
