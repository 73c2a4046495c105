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

#include "rotflow/euler.hpp"
#include "rotflow/field.hpp"

namespace rotflow {

struct FrameMap {
  enum class Direction { to_rotating, to_nonrotating };
  Direction direction;
  Omega omega;
};

// to_rotating:    u(t,th,ph) = u~(t,th,ph + w t),  v = v~(t,th,ph + w t) - w
// to_nonrotating: u~(t,th,ph) = u(t,th,ph - w t), v~ = v(t,th,ph - w t) + w
// Applying a map to a field already in the target frame throws
// invalid_argument.  Applying the inverse of the map that produced a field
// returns the original field object.
FieldPtr map_field(const FrameMap& fm, const FieldPtr& field);

enum class PhysicalDirection { to_physical, to_coordinate };

// (u, v) <-> (u, v sin theta); the regime tag moves between FULL/CORIOLIS
// and PHYS_FULL/PHYS_CORIOLIS, and RAPID/PHYS_RAPID (which are not
// equivalent; the map is applied anyway and the tag records it).
FieldPtr physical_map(PhysicalDirection dir, const FieldPtr& field);
State physical_map(PhysicalDirection dir, const State& s);

struct PeriodicityGrid {
  int n_t = 4, n_theta = 16, n_phi = 16;
  double t_lo = 0, t_hi = 1;
  double theta_lo = 0.2, theta_hi = 2.9;
};

// max |u(t+T) - u(t)|, |v(t+T) - v(t)| with T = 2 pi / omega over the valid
// grid nodes.
double periodicity_check(const SolutionField& f, Omega omega, const PeriodicityGrid& g = {});

// max |u(phi + 2 pi) - u(phi)| over the same grid.
double phi_periodicity_check(const SolutionField& f, const PeriodicityGrid& g = {});

// u unchanged, v -> v - omega (to_rotating) or v + omega.  Throws
// not_phi_independent unless the field is phi independent to 1e-12.
FieldPtr phi_independent_shift(const FrameMap& fm, const FieldPtr& field);

}  // namespace rotflow
