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

// Small closed algebra of scalar functions used to specify the arbitrary
// functions of hodograph and reduced problems in a serializable way.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace rotflow {

// One-argument function.
//   const          c
//   poly           c0 + c1 x + c2 x^2 + ...
//   cos, sin       A + B cos(w x + p), A + B sin(w x + p)
//   exp            A + B exp(c x)
//   sqrt_neg_log   sqrt(-log x) on (0, 1], inverse exp(-y^2)
struct Fn1 {
  enum class Kind { constant, poly, cos, sin, exp, sqrt_neg_log };
  Kind kind = Kind::constant;
  std::vector<double> p;  // coefficients, or {A, B, w, phase} / {A, B, c}

  static Fn1 constant(double c);
  static Fn1 poly(std::vector<double> coeffs);
  static Fn1 cosine(double A, double B, double w, double phase);
  static Fn1 sine(double A, double B, double w, double phase);
  static Fn1 exponential(double A, double B, double c);
  static Fn1 sqrt_neg_log();

  double operator()(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;
  // Closed-form inverse where the kind has one (poly of degree <= 1,
  // sqrt_neg_log, exp); throws invalid_argument otherwise.
  double inverse(double y) const;
  bool has_inverse() const;
  int degree() const;  // polynomial degree, -1 for non-polynomials
  bool is_2pi_periodic() const;

  nlohmann::json to_json() const;
  static Fn1 from_json(const nlohmann::json& j);  // throws config
};

// Separable two-argument function Phi(a, b) = first(a) + second(b).  The
// second slot carries the advected phase phi + omega t where used.
struct Fn2 {
  Fn1 first = Fn1::constant(0);
  Fn1 second = Fn1::constant(0);

  double operator()(double a, double b) const { return first(a) + second(b); }
  double da(double a, double) const { return first.deriv(a); }

  nlohmann::json to_json() const;
  static Fn2 from_json(const nlohmann::json& j);
};

// Callable form used by the solvers so tests can pass arbitrary lambdas.
struct Fn2Callable {
  std::function<double(double, double)> f;
  std::function<double(double, double)> da;

  static Fn2Callable from(const Fn2& d);
};

}  // namespace rotflow
