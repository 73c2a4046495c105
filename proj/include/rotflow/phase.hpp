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

// Angle-like phase variables along the one-dimensional latitude motions of
// the CORIOLIS, RAPID and RAPID_CORIOLIS characteristic systems.  Each phase
// advances at a constant rate in t, so "phase - rate * t" is conserved.

#include "rotflow/euler.hpp"

namespace rotflow::phase {

// ---- CORIOLIS: x = cos(theta), xdot^2 = w^2 (A+ - x^2)(x^2 - A-) ----------

struct CoriolisPhase {
  double H, L3, A_plus, A_minus, k;
  bool reciprocal;     // k > 1, evaluated through modulus 1/k
  double P_point;      // F(psi,k) - sb |w| sqrt(A+) t
  double N_point;      // phi + w t - sb C Pi(psi, alpha2, k)
  double P_canon, P_period;
  double N_canon, N_period;
  double N_star;       // reciprocal-modulus form of N_point (k > 1 only)
};

CoriolisPhase coriolis_phase(const State& s, double omega, int sign_branch);

// ---- RAPID and PHYS_RAPID: x = sin(theta), u^2 = w^2 (k + x^2) -------------

struct RapidOrbit {
  double k, omega;
  double modulus;   // Jacobi modulus of the phase
  double quarter;   // phase length pole/turning -> equator
  // Phase W in [0, 4*quarter) advancing at rate |omega|.
  double phase(double theta, double u) const;
  // G on the current quarter (the closed-form elliptic integral).
  double G(double theta, double u) const;
  double x2(double W) const;
};

RapidOrbit rapid_orbit(double k, double omega);

// ---- RAPID_CORIOLIS: u^2 = 2 R(x), R = I1 + w(w+I2)x^2 - w^2 x^2 log x^2 --

class CoriolisRapidOrbit {
public:
  CoriolisRapidOrbit(double I1, double I2, double omega, double x_hint);

  double xa() const { return xa_; }
  double xb() const { return xb_; }
  bool lower_turning() const { return lower_turning_; }
  bool reaches_equator() const { return equator_; }
  double R(double x) const;

  // Time from xa to the point, with the point given by theta and u so the
  // distances to the turning points can be formed without cancellation.
  double time_from_lower(double theta, double u) const;
  // Time-weighted integral of log x^2 from xa to the point.
  double log_from_lower(double theta, double u) const;

  double half_time() const { return Ta_; }  // xa -> xb
  double half_log() const { return Hb_; }
  bool periodic() const { return lower_turning_; }
  double period() const { return equator_ ? 4 * Ta_ : 2 * Ta_; }
  double log_per_period() const { return equator_ ? 4 * Hb_ : 2 * Hb_; }

  // Phase s (time units) of a state on this orbit.
  double phase(double theta, double u) const;
  // Lambda(s) = time integral of log x^2 over phase [0, s].
  double lambda(double s) const;

private:
  double R_from(double x0, double dy) const;
  double R_near(double da, double db) const;
  double chi_of(double theta, double u) const;
  double T_chi(double chi) const;
  double Hlog_chi(double chi) const;
  double integrand_chi(double psi, bool weighted) const;
  double chi_of_time(double tau) const;

  double I1_, I2_, w_;
  double xa_, xb_;
  bool lower_turning_, equator_;
  double slope_a_, slope_b_;
  double Ta_, Hb_;
};

}  // namespace rotflow::phase
