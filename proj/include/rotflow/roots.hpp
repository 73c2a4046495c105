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

#include <array>
#include <functional>
#include <vector>

namespace rotflow::roots {

// Brent's method on a sign-changing bracket.  Throws no_root if f(a), f(b)
// have the same sign.
double brent(const std::function<double(double)>& f, double a, double b,
             double xtol = 1e-15, int max_iter = 200);

// Sample f on n uniform cells of [a,b] and return every bracketed root.
// Non-finite samples split the scan so poles are not mistaken for roots.
std::vector<double> all_roots(const std::function<double(double)>& f, double a, double b,
                              int n, double xtol = 1e-15);

struct Newton2Result {
  std::array<double, 2> x;
  std::array<double, 2> residual;
  double jacobian_det;
  int iterations;
};

using Vec2Fn = std::function<std::array<double, 2>(const std::array<double, 2>&)>;

// Damped Newton for two equations, Jacobian by central differences unless
// jac is given.  Throws NoConvergenceError carrying the best residual.
Newton2Result newton2(const Vec2Fn& f, std::array<double, 2> x0, double tol,
                      int max_iter = 60,
                      const std::function<std::array<double, 4>(const std::array<double, 2>&)>&
                          jac = nullptr);

// Central-difference Jacobian, row major (df0/dx0, df0/dx1, df1/dx0, df1/dx1).
std::array<double, 4> jacobian_fd(const Vec2Fn& f, const std::array<double, 2>& x);

}  // namespace rotflow::roots
