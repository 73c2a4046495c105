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

#include <optional>
#include <string>
#include <vector>

#include "rotflow/euler.hpp"

namespace rotflow {

enum class InvariantKind {
  algebraic,       // polynomial/log closed forms
  transcendental,  // elliptic or quadrature based
  auxiliary,       // reported but not conserved (Q, sigma)
};

struct InvariantEntry {
  std::string name;
  double value;
  InvariantKind kind;
};

class InvariantSet {
public:
  Regime regime = Regime::FULL;
  std::vector<InvariantEntry> entries;

  void set(const std::string& name, double value, InvariantKind kind);
  double get(const std::string& name) const;  // throws invalid_argument
  bool has(const std::string& name) const;
};

// sigma = 0 picks sign(u) (with +1 at u = 0).
InvariantSet full_integrals(const State& s, Omega omega, int sigma = 0);

// sign_branch = 0 picks sign(cos(theta) u) (+1 at 0): +1 is the branch on
// which |cos(theta)| is decreasing.
InvariantSet coriolis_integrals(const State& s, Omega omega, int sign_branch = 0);

InvariantSet rapid_integrals(const State& s, Omega omega);

// xi_ref: lower limit of the G quadrature (sin(theta) at t = 0 when known).
InvariantSet rapid_coriolis_integrals(const State& s, Omega omega,
                                      std::optional<double> xi_ref = std::nullopt);

// s carries (u~, v~) = (u, v sin(theta)).
InvariantSet physical_rapid_integrals(const State& s, Omega omega);

struct MechanicsSet {
  double L, p_theta, p_phi, E, Hcan;
};

MechanicsSet mechanics(const State& s, Omega omega);

// Dispatch on regime.  PHYS_FULL and PHYS_CORIOLIS are evaluated through the
// coordinate-velocity integrals of FULL and CORIOLIS.
InvariantSet evaluate_invariants(Regime r, const State& s, Omega omega);

// Limit comparison for big omega: I1* = H - omega L3 with the CORIOLIS H, L3.
double coriolis_i1_star(const State& s, Omega omega);

// Trajectory-local branch ledger.  Feed samples in time order; values come
// back continuous across turning points and phase wraps.
class InvariantTracker {
public:
  InvariantTracker(Regime r, Omega omega);
  InvariantSet next(const State& s);

private:
  struct Wrap {
    bool init = false;
    double last = 0;
  };
  double unwrap(Wrap& w, double raw, double period);

  Regime regime_;
  Omega omega_;
  bool started_ = false;
  int sigma0_ = 1;
  Wrap w_i1_, w_j_, w_p_, w_n_, w_i3_;
};

}  // namespace rotflow
