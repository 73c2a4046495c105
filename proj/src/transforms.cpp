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

#include "rotflow/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rotflow/error.hpp"

namespace rotflow {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

const char* map_name(FrameMap::Direction d) {
  return d == FrameMap::Direction::to_rotating ? "to_rotating" : "to_nonrotating";
}

const char* inverse_name(FrameMap::Direction d) {
  return d == FrameMap::Direction::to_rotating ? "to_nonrotating" : "to_rotating";
}

Frame target(FrameMap::Direction d) {
  return d == FrameMap::Direction::to_rotating ? Frame::rotating : Frame::nonrotating;
}

std::shared_ptr<SolutionField> derived(const FieldPtr& src, const std::string& map) {
  auto f = std::make_shared<SolutionField>(*src);
  f->source = src;
  f->applied_map = map;
  return f;
}

}  // namespace

FieldPtr map_field(const FrameMap& fm, const FieldPtr& field) {
  if (!field) fail(ErrorCode::invalid_argument, "map_field: null field");
  if (field->frame == target(fm.direction))
    fail(ErrorCode::invalid_argument,
         std::string("map_field: field is already in the target frame (") + map_name(fm.direction) +
             ")");
  if (field->source && field->applied_map == inverse_name(fm.direction) &&
      field->omega.value == fm.omega.value)
    return field->source;
  auto f = derived(field, map_name(fm.direction));
  const double w = fm.omega.value;
  auto src = field;
  f->frame = target(fm.direction);
  f->omega = fm.omega;
  if (fm.direction == FrameMap::Direction::to_rotating) {
    f->fn = [src, w](double t, double th, double ph) {
      auto a = src->eval(t, th, ph + w * t);
      return FieldValue{a.u, a.v - w};
    };
  } else {
    f->fn = [src, w](double t, double th, double ph) {
      auto a = src->eval(t, th, ph - w * t);
      return FieldValue{a.u, a.v + w};
    };
  }
  return f;
}

namespace {

Regime physical_regime(Regime r, PhysicalDirection dir) {
  if (dir == PhysicalDirection::to_physical) {
    switch (r) {
      case Regime::FULL: return Regime::PHYS_FULL;
      case Regime::CORIOLIS: return Regime::PHYS_CORIOLIS;
      case Regime::RAPID: return Regime::PHYS_RAPID;
      default: fail(ErrorCode::invalid_argument, "physical_map: no physical counterpart");
    }
  }
  switch (r) {
    case Regime::PHYS_FULL: return Regime::FULL;
    case Regime::PHYS_CORIOLIS: return Regime::CORIOLIS;
    case Regime::PHYS_RAPID: return Regime::RAPID;
    default: fail(ErrorCode::invalid_argument, "physical_map: field is not in physical velocities");
  }
}

}  // namespace

FieldPtr physical_map(PhysicalDirection dir, const FieldPtr& field) {
  if (!field) fail(ErrorCode::invalid_argument, "physical_map: null field");
  const bool to_phys = dir == PhysicalDirection::to_physical;
  if ((field->velocity == VelocityKind::physical) == to_phys)
    fail(ErrorCode::invalid_argument, "physical_map: field already uses the target velocities");
  const char* name = to_phys ? "to_physical" : "to_coordinate";
  const char* inv = to_phys ? "to_coordinate" : "to_physical";
  if (field->source && field->applied_map == inv) return field->source;
  auto f = derived(field, name);
  f->regime = physical_regime(field->regime, dir);
  f->velocity = to_phys ? VelocityKind::physical : VelocityKind::coordinate;
  auto src = field;
  f->fn = [src, to_phys](double t, double th, double ph) {
    auto a = src->eval(t, th, ph);
    const double s = std::sin(th);
    if (!to_phys && s == 0) fail(ErrorCode::domain, "physical_map: sin(theta) = 0");
    return FieldValue{a.u, to_phys ? a.v * s : a.v / s};
  };
  return f;
}

State physical_map(PhysicalDirection dir, const State& s) {
  const double sn = std::sin(s.theta);
  State o = s;
  if (dir == PhysicalDirection::to_physical) {
    o.v = s.v * sn;
  } else {
    if (sn == 0) fail(ErrorCode::domain, "physical_map: sin(theta) = 0");
    o.v = s.v / sn;
  }
  return o;
}

namespace {

template <class F>
double grid_max(const PeriodicityGrid& g, F&& diff) {
  double worst = 0;
  for (int i = 0; i < g.n_t; ++i) {
    const double t = g.n_t == 1 ? g.t_lo : g.t_lo + (g.t_hi - g.t_lo) * i / (g.n_t - 1);
    for (int j = 0; j < g.n_theta; ++j) {
      const double th = g.theta_lo + (g.theta_hi - g.theta_lo) * (j + 0.5) / g.n_theta;
      for (int k = 0; k < g.n_phi; ++k) {
        const double ph = two_pi * (k + 0.5) / g.n_phi;
        try {
          worst = std::max(worst, diff(t, th, ph));
        } catch (const Error&) {
        }
      }
    }
  }
  return worst;
}

}  // namespace

double periodicity_check(const SolutionField& f, Omega omega, const PeriodicityGrid& g) {
  if (omega.value == 0) fail(ErrorCode::domain, "periodicity_check: omega = 0");
  const double T = two_pi / std::abs(omega.value);
  return grid_max(g, [&](double t, double th, double ph) {
    auto a = f.eval(t, th, ph), b = f.eval(t + T, th, ph);
    return std::max(std::abs(a.u - b.u), std::abs(a.v - b.v));
  });
}

double phi_periodicity_check(const SolutionField& f, const PeriodicityGrid& g) {
  return grid_max(g, [&](double t, double th, double ph) {
    auto a = f.eval(t, th, ph), b = f.eval(t, th, ph + two_pi);
    return std::max(std::abs(a.u - b.u), std::abs(a.v - b.v));
  });
}

FieldPtr phi_independent_shift(const FrameMap& fm, const FieldPtr& field) {
  if (!field) fail(ErrorCode::invalid_argument, "phi_independent_shift: null field");
  if (field->frame == target(fm.direction))
    fail(ErrorCode::invalid_argument, "phi_independent_shift: field already in the target frame");
  // Sampled check of phi independence.
  PeriodicityGrid g;
  g.n_t = 3;
  g.n_theta = 8;
  g.n_phi = 8;
  const double dev = grid_max(g, [&](double t, double th, double ph) {
    auto a = field->eval(t, th, ph), b = field->eval(t, th, 0.5);
    return std::max(std::abs(a.u - b.u), std::abs(a.v - b.v));
  });
  if (dev > 1e-12)
    fail(ErrorCode::not_phi_independent,
         "phi_independent_shift: field varies with phi (" + std::to_string(dev) + ")");
  if (field->source && field->applied_map == std::string("shift_") + inverse_name(fm.direction))
    return field->source;
  auto f = derived(field, std::string("shift_") + map_name(fm.direction));
  f->frame = target(fm.direction);
  f->omega = fm.omega;
  const double dv = fm.direction == FrameMap::Direction::to_rotating ? -fm.omega.value
                                                                      : fm.omega.value;
  auto src = field;
  f->fn = [src, dv](double t, double th, double ph) {
    auto a = src->eval(t, th, ph);
    return FieldValue{a.u, a.v + dv};
  };
  return f;
}

}  // namespace rotflow
