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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rotflow/euler.hpp"

namespace rotflow {

enum class Frame { rotating, nonrotating };
enum class VelocityKind { coordinate, physical };

struct FieldValue {
  double u, v;
};

// Analytic velocity field (u,v)(t,theta,phi).  The evaluator throws a
// domain Error where the family is singular.
struct SolutionField {
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  Omega omega;
  Regime regime = Regime::FULL;  // PDE the field is meant to solve
  Frame frame = Frame::rotating;
  VelocityKind velocity = VelocityKind::coordinate;
  std::function<FieldValue(double t, double theta, double phi)> fn;

  // Set by transforms so an exact inverse can unwind the map.
  std::shared_ptr<const SolutionField> source;
  std::string applied_map;

  FieldValue eval(double t, double theta, double phi) const;
  bool valid(double t, double theta, double phi) const;
  double param(const std::string& name) const;
};

using FieldPtr = std::shared_ptr<const SolutionField>;

struct Residual {
  double r1, r2;
};

// Material derivative minus force with fourth-order central differences of
// half-width 2h in t, theta and phi (phi wraps mod 2 pi).  Throws domain if
// any stencil point is invalid.
Residual pde_residual(const SolutionField& f, Regime regime, double t, double theta,
                      double phi, double h = 1e-4);

// Simple fields used in tests and examples.
FieldPtr make_rest_field(Omega omega);  // u = 0, v = -omega
FieldPtr make_analytic_field(std::string family, Omega omega, Regime regime,
                             std::function<FieldValue(double, double, double)> fn,
                             std::vector<std::pair<std::string, double>> params = {});

}  // namespace rotflow
