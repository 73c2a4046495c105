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

namespace rotflow::quad {

struct Result {
  double value = 0;
  double abs_error = 0;
  int evaluations = 0;
};

// Globally adaptive 7/15 Gauss-Kronrod.  Throws quadrature_failure on a
// non-finite integrand value or when the interval budget runs out.
Result gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals = 4000);

// Convenience wrapper returning the value only.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13, double abs_tol = 1e-15);

}  // namespace rotflow::quad
