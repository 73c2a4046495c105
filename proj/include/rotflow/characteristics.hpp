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

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rotflow/euler.hpp"
#include "rotflow/invariants.hpp"

namespace rotflow {

enum class TrajectoryStatus { completed, boundary_hit, step_underflow };

const char* trajectory_status_name(TrajectoryStatus s);

struct Trajectory {
  Regime regime = Regime::FULL;
  Omega omega;
  double rel_tol = 0, abs_tol = 0;
  std::vector<State> samples;   // phi unwrapped
  std::vector<double> aux;      // running auxiliary integral, empty if unused
  TrajectoryStatus status = TrajectoryStatus::completed;

  const State& back() const { return samples.back(); }
  // Throws boundary_hit / step_underflow when the run did not complete.
  void require_complete() const;
};

struct IntegrateOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double h_max = 0.1;
  // Extra quantity integrated alongside the state:
  // aux' = g(state, force).  Stored per sample in Trajectory::aux.
  std::function<double(const State&, const Force&)> aux;
};

// Integrates the characteristic system from start.t to t_end (either
// direction).  Leaving the theta guard band stops the run with status
// boundary_hit and keeps the partial trajectory.
Trajectory integrate(Regime regime, const State& start, Omega omega, double t_end,
                     const IntegrateOptions& opt = {});

struct DriftEntry {
  std::string name;
  InvariantKind kind;
  double initial;
  double max_drift;  // max |I(t) - I(0)| / max(1, |I(0)|)
};

struct DriftReport {
  std::vector<DriftEntry> entries;
  const DriftEntry& get(const std::string& name) const;
  double worst(InvariantKind kind) const;
};

// Auxiliary entries (Q, sigma) are skipped.
DriftReport invariant_drift(const Trajectory& traj);

// Integrand whose running integral plus u^2 is conserved along
// RAPID_CORIOLIS characteristics: sin^2(theta) d(v^2)/dt.
double rapid_coriolis_energy_rate(const State& s, const Force& f);

}  // namespace rotflow
