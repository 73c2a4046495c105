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

// Carlson symmetric integrals, Legendre forms and Jacobi functions.

namespace rotflow::elliptic {

enum class Branch { direct, reciprocal_modulus };

struct EllipticEval {
  double value = 0;
  double modulus_k = 0;
  Branch branch_note = Branch::direct;
};

struct JacobiTriple {
  double sn, cn, dn;
};

struct ReciprocalModulus {
  double psi;
  double check;
};

double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);
double carlson_rc(double x, double y);
double carlson_rj(double x, double y, double z, double p);

// F(phi,k).  Any real phi for k < 1; |phi| <= pi/2 and k sin(phi) < 1 for
// k >= 1, where k > 1 goes through the reciprocal modulus.
EllipticEval ellint_f(double phi, double k);

// Pi(phi, alpha2, k) = int_0^phi dt / ((1 - alpha2 sin^2 t) Delta(t)).
EllipticEval ellint_pi(double phi, double alpha2, double k);

// Second kind, same domain rules as ellint_f.
double ellint_e(double phi, double k);

// dF/dk at fixed phi.
double ellint_f_dk(double phi, double k);

// Complete integrals, k < 1.
double complete_k(double k);
double complete_pi(double alpha2, double k);

// Inputs given as sin(phi), cos(phi) >= 0 and Delta^2 = 1 - k^2 sin^2(phi).
// Passing Delta^2 separately keeps cancellation out of the hot paths.
double ellint_f_sc(double s, double c, double delta2);
double ellint_pi_sc(double s, double c, double delta2, double alpha2);

JacobiTriple jacobi_sn_cn_dn(double x, double k);

// Amplitude: am(F(phi,k), k) = phi for all real phi, k < 1.
double jacobi_am(double x, double k);

// Pi evaluated at amplitude am(y,k).
double ellint_pi_u(double y, double alpha2, double k);

ReciprocalModulus reciprocal_modulus(double phi, double k);

}  // namespace rotflow::elliptic
