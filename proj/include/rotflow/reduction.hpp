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

// Solutions with v + omega = 0: a single transport equation for u (or for
// the elliptic modulus k = omega / sqrt(u^2 + omega^2 sin^2 theta)).

#include <functional>
#include <vector>

#include "rotflow/descriptor.hpp"
#include "rotflow/euler.hpp"
#include "rotflow/field.hpp"

namespace rotflow {

struct ScalarRoot {
  double value;      // u, zeta or k
  double condition;  // blow-up condition at the root
  std::vector<double> all;  // every root found in the bracket
};

struct RootSearch {
  double lo = -1e3, hi = 1e3;
  int cells = 4000;
  enum class Pick { unique, smallest, nearest } pick = Pick::unique;
  double hint = 0;
};

// theta - u t = Phi(u, phi + omega t).  Closed form when the first slot of
// the descriptor is a polynomial of degree <= 2.  condition = dPhi/du + t.
ScalarRoot hopf_solve(const Fn2& Phi, Omega omega, double t, double theta, double phi,
                      RootSearch search = {});
ScalarRoot hopf_solve(const Fn2Callable& Phi, Omega omega, double t, double theta, double phi,
                      RootSearch search = {});
FieldPtr make_hopf_field(const Fn2& Phi, Omega omega, RootSearch search = {});

// -zeta t + F(theta, omega/zeta) - Phi(zeta, phi + omega t) = 0 with
// u = sqrt(zeta^2 - omega^2 sin^2 theta).  literal_zeta switches to
// u = sqrt(zeta - omega^2 sin^2 theta) for comparison.
// condition = dG/dzeta = -t - (omega / zeta^2) dF/dk - dPhi/dzeta.
struct CoriolisReducedOptions {
  double zeta_hi = 50;
  int cells = 2000;
  bool literal_zeta = false;
};

struct CoriolisReducedPoint {
  double u, zeta, condition;
};

CoriolisReducedPoint coriolis_reduced_solve(const Fn2Callable& Phi, Omega omega, double t,
                                            double theta, double phi,
                                            CoriolisReducedOptions opt = {});
FieldPtr make_coriolis_reduced_field(const Fn2Callable& Phi, Omega omega,
                                     CoriolisReducedOptions opt = {});

// u = branch * sqrt(Phi(phi + omega t) - omega^2 sin^2 theta), v = -omega.
// no_sqrt drops the square root.
FieldValue stationary_coriolis_family(const Fn1& Phi, double t, double theta, double phi,
                                      Omega omega, int branch, bool no_sqrt = false);
FieldPtr make_stationary_coriolis_field(const Fn1& Phi, Omega omega, int branch,
                                        bool no_sqrt = false);

// -omega t + k F(theta, k) = Phi(k, phi + omega t), k in (0, 1/sin(theta)).
// The smallest root is returned unless search.pick says otherwise.
// condition = F + k dF/dk - dPhi/dk.
ScalarRoot modulus_solve(const Fn2Callable& Phi, Omega omega, double t, double theta, double phi,
                         int cells = 2000);

using ScalarField = std::function<double(double t, double theta, double phi)>;

// k_t + (omega sqrt(1 - k^2 sin^2 theta) / k) k_theta - omega k_phi with
// fourth-order central differences.
double modulus_pde_residual(const ScalarField& k, Omega omega, double t, double theta, double phi,
                            double h = 1e-4);

// Libration period of theta'' + omega^2 sin(theta) cos(theta) = 0 from
// theta(0) = theta_max, u(0) = 0, measured by integration.
double pendulum_period(double theta_max, Omega omega, double rel_tol = 1e-12);
double pendulum_period_exact(double theta_max, Omega omega);

}  // namespace rotflow
