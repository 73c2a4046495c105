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

#include <string>

namespace rotflow {

// Right-hand side variants.  The PHYS_* regimes carry physical velocities
// (u, v sin(theta)) in the u, v slots.
enum class Regime { FULL, CORIOLIS, RAPID, RAPID_CORIOLIS, PHYS_FULL, PHYS_CORIOLIS, PHYS_RAPID };

const char* regime_name(Regime r);
Regime regime_from_name(const std::string& name);  // throws config on unknown
bool is_physical(Regime r);

struct Omega {
  double value = 0;
};

// Point (t, theta, phi, u, v).  Trajectories keep phi unwrapped; the
// reduced longitude and winding number are derived on demand.
struct State {
  double t = 0, theta = 0, phi = 0, u = 0, v = 0;
  double phi_reduced() const;
  long winding() const;
};

inline constexpr double theta_guard = 1e-6;

struct Force {
  double f1, f2;
};

// Throws domain at sin(theta) == 0.
Force force(Regime r, double theta, double u, double v, Omega omega);

// dphi/dt implied by the velocity slot v.
double phi_rate(Regime r, double theta, double v);

}  // namespace rotflow
