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
#include <limits>
#include <vector>

namespace rotflow::ode {

using Vec = std::vector<double>;
using Rhs = std::function<void(double t, const double* y, double* dydt)>;

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double h_init = 0;  // 0 picks a starting step automatically
  double h_max = std::numeric_limits<double>::infinity();
  long max_steps = 2000000;
};

struct Event {
  std::function<double(double t, const double* y)> g;
  int direction = 0;  // +1 rising only, -1 falling only, 0 both
  bool terminal = false;
};

struct EventHit {
  int index;
  double t;
  Vec y;
};

enum class Status { completed, terminal_event, step_underflow, max_steps };

struct Solution {
  std::vector<double> t;
  std::vector<Vec> y;
  std::vector<Vec> dydt;
  std::vector<EventHit> events;
  Status status = Status::completed;
  long accepted = 0;
  long rejected = 0;
};

// Dormand-Prince 5(4) with PI step control.  Every accepted step end is
// stored; t1 < t0 integrates backwards.
Solution dopri5(const Rhs& f, double t0, const Vec& y0, double t1, const Options& opt,
                const std::vector<Event>& events = {});

// Cubic Hermite interpolation on the stored steps.
Vec dense(const Solution& s, double t);

}  // namespace rotflow::ode
