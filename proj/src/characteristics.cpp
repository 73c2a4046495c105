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

#include "rotflow/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rotflow/error.hpp"
#include "rotflow/ode.hpp"

namespace rotflow {

const char* trajectory_status_name(TrajectoryStatus s) {
  switch (s) {
    case TrajectoryStatus::completed: return "completed";
    case TrajectoryStatus::boundary_hit: return "boundary_hit";
    case TrajectoryStatus::step_underflow: return "step_underflow";
  }
  return "?";
}

void Trajectory::require_complete() const {
  if (status == TrajectoryStatus::boundary_hit)
    fail(ErrorCode::boundary_hit, "trajectory reached the theta guard band at t = " +
                                      std::to_string(samples.back().t));
  if (status == TrajectoryStatus::step_underflow)
    fail(ErrorCode::step_underflow, "step size underflow at t = " + std::to_string(samples.back().t));
}

Trajectory integrate(Regime regime, const State& start, Omega omega, double t_end,
                     const IntegrateOptions& opt) {
  constexpr double pi = std::numbers::pi;
  if (!(start.theta > theta_guard && start.theta < pi - theta_guard))
    fail(ErrorCode::domain, "integrate: start theta outside the guard band");
  if (!std::isfinite(t_end)) fail(ErrorCode::invalid_argument, "integrate: t_end not finite");
  const bool with_aux = static_cast<bool>(opt.aux);

  auto rhs = [&](double t, const double* y, double* dy) {
    // A trial stage past a pole is rejected by the step controller.
    if (!(y[0] > 0 && y[0] < pi)) {
      for (int i = 0; i < (with_aux ? 5 : 4); ++i) dy[i] = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    Force F = force(regime, y[0], y[2], y[3], omega);
    dy[0] = y[2];
    dy[1] = phi_rate(regime, y[0], y[3]);
    dy[2] = F.f1;
    dy[3] = F.f2;
    if (with_aux) dy[4] = opt.aux(State{t, y[0], y[1], y[2], y[3]}, F);
  };
  ode::Options o;
  o.rel_tol = opt.rel_tol;
  o.abs_tol = opt.abs_tol;
  o.h_max = opt.h_max > 0 ? opt.h_max : std::numeric_limits<double>::infinity();
  std::vector<ode::Event> events = {
      {[](double, const double* y) { return y[0] - theta_guard; }, -1, true},
      {[](double, const double* y) { return pi - theta_guard - y[0]; }, -1, true},
  };
  ode::Vec y0 = {start.theta, start.phi, start.u, start.v};
  if (with_aux) y0.push_back(0);
  auto sol = ode::dopri5(rhs, start.t, y0, t_end, o, events);

  Trajectory tr;
  tr.regime = regime;
  tr.omega = omega;
  tr.rel_tol = opt.rel_tol;
  tr.abs_tol = opt.abs_tol;
  tr.samples.reserve(sol.t.size());
  for (std::size_t i = 0; i < sol.t.size(); ++i) {
    const auto& y = sol.y[i];
    tr.samples.push_back({sol.t[i], y[0], y[1], y[2], y[3]});
    if (with_aux) tr.aux.push_back(y[4]);
  }
  switch (sol.status) {
    case ode::Status::completed: tr.status = TrajectoryStatus::completed; break;
    case ode::Status::terminal_event: tr.status = TrajectoryStatus::boundary_hit; break;
    case ode::Status::step_underflow:
    case ode::Status::max_steps: tr.status = TrajectoryStatus::step_underflow; break;
  }
  return tr;
}

const DriftEntry& DriftReport::get(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  fail(ErrorCode::invalid_argument, "drift report has no entry '" + name + "'");
}

double DriftReport::worst(InvariantKind kind) const {
  double w = 0;
  for (const auto& e : entries)
    if (e.kind == kind) w = std::max(w, e.max_drift);
  return w;
}

DriftReport invariant_drift(const Trajectory& traj) {
  if (traj.samples.empty()) fail(ErrorCode::invalid_argument, "invariant_drift: empty trajectory");
  InvariantTracker tracker(traj.regime, traj.omega);
  DriftReport rep;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    InvariantSet set = tracker.next(traj.samples[i]);
    if (i == 0) {
      for (const auto& e : set.entries)
        if (e.kind != InvariantKind::auxiliary) rep.entries.push_back({e.name, e.kind, e.value, 0});
      continue;
    }
    for (auto& d : rep.entries) {
      const double v = set.get(d.name);
      const double r = std::abs(v - d.initial) / std::max(1.0, std::abs(d.initial));
      d.max_drift = std::max(d.max_drift, std::isfinite(r) ? r : INFINITY);
    }
  }
  return rep;
}

double rapid_coriolis_energy_rate(const State& s, const Force& f) {
  const double sn = std::sin(s.theta);
  return sn * sn * 2 * s.v * f.f2;
}

}  // namespace rotflow
