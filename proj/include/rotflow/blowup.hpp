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
#include <string>
#include <vector>

#include "rotflow/field.hpp"

namespace rotflow {

// Scalar blow-up condition at (t, theta, phi).  Throwing an Error marks the
// point as unsolvable.
using Condition = std::function<double(double t, double theta, double phi)>;

struct Axis {
  double lo = 0, hi = 0;
  int n = 1;  // number of nodes; 1 pins the coordinate at lo
  double at(int i) const { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1); }
};

struct ScanGrid {
  Axis t, theta, phi;
};

struct LocusPoint {
  double t, theta, phi, value;
};

struct BlowupLocus {
  std::string condition;
  std::vector<LocusPoint> points;
  std::vector<std::pair<int, int>> segments;  // indices into points
  long unsolved_nodes = 0;
  long total_nodes = 0;
};

// Sign changes of g along grid edges refined by bisection.  An unsolvable
// node between two solvable ones of opposite sign is bridged.  Bisection
// stops at an unsolvable midpoint; refined points with |g| >= tol are
// discarded (sign flips across poles).  Two points are joined when their
// edges bound the same grid square.  Throws empty_domain
// if no node is solvable.  threads <= 1 runs serially.
BlowupLocus scan(const Condition& g, const ScanGrid& grid, double tol, std::string name,
                 int threads = 1);

struct GrowthSample {
  double distance, derivative;
};

struct GrowthReport {
  std::vector<GrowthSample> samples;
  bool monotone = false;
};

// |du/dtheta| by central differences at points (t0 - d, theta, phi) for
// each d, with step d * rel_step.  The probe approaches the locus t = t0
// from below.
GrowthReport derivative_growth_probe(const SolutionField& f, double t0, double theta, double phi,
                                     const std::vector<double>& distances,
                                     double rel_step = 1e-3);

}  // namespace rotflow
