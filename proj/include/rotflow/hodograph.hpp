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
#include <optional>
#include <string>

#include "rotflow/descriptor.hpp"
#include "rotflow/euler.hpp"
#include "rotflow/field.hpp"

namespace rotflow {

// c + a X + b Y
struct LinearPsi {
  double c = 0, a = 0, b = 0;
  double operator()(double X, double Y) const { return c + a * X + b * Y; }
};

// Pointwise hodograph system E(u, v) = 0 at fixed (t, theta, phi).
//
//   integrals  E_i = T_i(J_i) - psi_i(X, Y), where J_i, X, Y name entries of
//              the regime's invariant set and T_i is the identity or sin.
//              Presets: simple (I1, L3 | L1, L2), single_valued
//              (sin I2, L3 | L1, L2), coriolis (P, N | H, L3), rapid
//              (I3, I4 | I1, I2).
//   angmom     the two angular-momentum equations with F1, F2 of
//              xi = (v + omega) sin^2(theta).
struct HodographProblem {
  enum class Kind { integrals, angmom };
  Kind kind = Kind::integrals;
  Regime regime = Regime::FULL;
  Omega omega;
  int sigma = 1;  // FULL: sign used in I1, I2

  std::string J1 = "I1", J2 = "L3", X = "L1", Y = "L2";
  bool sin1 = false, sin2 = false;
  LinearPsi psi1, psi2;

  Fn1 F1 = Fn1::constant(0), F2 = Fn1::constant(0);

  static HodographProblem simple(Omega w, int sigma, LinearPsi p1, LinearPsi p2);
  static HodographProblem single_valued(Omega w, int sigma, LinearPsi p1, LinearPsi p2);
  static HodographProblem coriolis(Omega w, LinearPsi p1, LinearPsi p2);
  static HodographProblem rapid(Regime r, Omega w, LinearPsi p1, LinearPsi p2);
  static HodographProblem angmom(Omega w, Fn1 f1, Fn1 f2);

  std::array<double, 2> residual(double t, double theta, double phi, double u, double v) const;
  // det of d(E1, E2)/d(u, v); equals det M of the differentiated system.
  double det_m(double t, double theta, double phi, double u, double v) const;
};

struct PointSolution {
  double u, v, det_m;
  std::array<double, 2> residual;
  int iterations;
  bool near_singular;  // |det M| below 1e-6
};

// Newton from the guess.  Throws NoConvergenceError (with the best residual)
// or singular_jacobian when |det M| < 1e-12 at the root.
PointSolution solve_pointwise(const HodographProblem& p, double t, double theta, double phi,
                              std::array<double, 2> guess, double tol = 1e-10);

// ---- closed-form families -------------------------------------------------

struct ConstPoint {
  double u, v, W;
};

// Constant psi1 = c1, psi2 = c2.  sigma is the sign of u.  Throws no_root
// when no real W exists; multiple roots pick the smallest W.
ConstPoint family_const(double c1, double c2, int sigma, double t, double theta, Omega omega);

// d I1 / d u at fixed v for the constant family, from the W form.
double family_const_di1_du(double c2, int sigma, double theta, double W);

struct LinearCoeffs {
  double a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  double c1 = 0;  // shifts t -> t - c1
};

struct LinearPoint {
  double u, v, alpha, beta, discriminant;
};

// psi_i = a_i L1 + b_i L2 (+ c1 in the first).  branch = +1 or -1 selects
// u = (-t' +- sqrt(t'^2 - 4 alpha beta)) / (2 alpha).
LinearPoint family_linear(const LinearCoeffs& k, int branch, double t, double theta, double phi,
                          Omega omega);

struct AngmomSpec {
  enum class Kind { linear, inverse, generic };
  Kind kind = Kind::linear;
  double a1 = 1, b1 = 0, a2 = 0, b2 = 0;  // linear: F_i = a_i + b_i xi
  double a = 0, b = 0;                    // inverse: F1 = a xi F, F2 = b xi F
  Fn1 F = Fn1::sqrt_neg_log();
  Fn1 F1 = Fn1::constant(1), F2 = Fn1::constant(0);  // generic
  double xi_lo = -10, xi_hi = 10, xi_hint = 0;       // generic root bracket

  static AngmomSpec basic() { return {}; }
};

FieldValue family_angmom(const AngmomSpec& s, double t, double theta, double phi, Omega omega);

// Stationary solution with constant L3 = omega.
FieldValue constant_L3_solution(double A, Omega omega, double theta, int branch);

// u^2 from H = Phi(L3) in the CORIOLIS regime.
double coriolis_constraint(const Fn1& Phi, double theta, double v, Omega omega);
// u^2 from the RAPID_CORIOLIS constraint I1 = Phi(I2).
double rapid_coriolis_constraint(const Fn1& Phi, double theta, double v, Omega omega);

// ---- fields ---------------------------------------------------------------

FieldPtr make_const_field(double c1, double c2, int sigma, Omega omega);
FieldPtr make_linear_field(const LinearCoeffs& k, int branch, Omega omega);
FieldPtr make_angmom_field(const AngmomSpec& s, Omega omega);
FieldPtr make_constant_L3_field(double A, Omega omega, int branch);
// theta-only RAPID_CORIOLIS solution: v = a - 2 omega log sin(theta).
FieldPtr make_rapid_coriolis_stationary_field(const Fn1& Phi, double a, Omega omega);
// Hodograph field solved pointwise by Newton from guess(t, theta, phi).
FieldPtr make_hodograph_field(const HodographProblem& p,
                              std::function<std::array<double, 2>(double, double, double)> guess,
                              std::string family = "hodograph");

}  // namespace rotflow
