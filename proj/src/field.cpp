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

#include "rotflow/field.hpp"

#include <cmath>
#include <numbers>

#include "rotflow/error.hpp"

namespace rotflow {

FieldValue SolutionField::eval(double t, double theta, double phi) const {
  if (!(theta >= theta_guard && theta <= std::numbers::pi - theta_guard))
    fail(ErrorCode::domain, family + ": theta outside the guard band");
  FieldValue v = fn(t, theta, phi);
  if (!std::isfinite(v.u) || !std::isfinite(v.v))
    fail(ErrorCode::domain, family + ": non-finite value");
  return v;
}

bool SolutionField::valid(double t, double theta, double phi) const {
  try {
    eval(t, theta, phi);
    return true;
  } catch (const Error&) {
    return false;
  }
}

double SolutionField::param(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  fail(ErrorCode::invalid_argument, family + ": no parameter '" + name + "'");
}

Residual pde_residual(const SolutionField& f, Regime regime, double t, double theta,
                      double phi, double h) {
  constexpr double two_pi = 2 * std::numbers::pi;
  auto wrap = [](double p) {
    double r = std::fmod(p, two_pi);
    return r < 0 ? r + two_pi : r;
  };
  const double off[4] = {-2, -1, 1, 2};
  FieldValue at[4], ath[4], aph[4];
  for (int i = 0; i < 4; ++i) {
    at[i] = f.eval(t + off[i] * h, theta, wrap(phi));
    ath[i] = f.eval(t, theta + off[i] * h, wrap(phi));
    aph[i] = f.eval(t, theta, wrap(phi + off[i] * h));
  }
  // Differences are paired first so constant fields give exact zeros.
  const double d = 12 * h;
  auto du = [d](const FieldValue* x) { return ((x[0].u - x[3].u) + 8 * (x[2].u - x[1].u)) / d; };
  auto dv = [d](const FieldValue* x) { return ((x[0].v - x[3].v) + 8 * (x[2].v - x[1].v)) / d; };
  const double ut = du(at), vt = dv(at), uth = du(ath), vth = dv(ath), uph = du(aph), vph = dv(aph);
  auto c0 = f.eval(t, theta, wrap(phi));
  // A field tagged as non-rotating solves the omega = 0 equations.
  const Omega om = f.frame == Frame::nonrotating ? Omega{0} : f.omega;
  Force F = force(regime, theta, c0.u, c0.v, om);
  double a = phi_rate(regime, theta, c0.v);
  return {ut + c0.u * uth + a * uph - F.f1, vt + c0.u * vth + a * vph - F.f2};
}

FieldPtr make_analytic_field(std::string family, Omega omega, Regime regime,
                             std::function<FieldValue(double, double, double)> fn,
                             std::vector<std::pair<std::string, double>> params) {
  auto f = std::make_shared<SolutionField>();
  f->family = std::move(family);
  f->omega = omega;
  f->regime = regime;
  f->velocity = is_physical(regime) ? VelocityKind::physical : VelocityKind::coordinate;
  f->fn = std::move(fn);
  f->params = std::move(params);
  return f;
}

FieldPtr make_rest_field(Omega omega) {
  double w = omega.value;
  return make_analytic_field("rest", omega, Regime::FULL,
                             [w](double, double, double) { return FieldValue{0.0, -w}; });
}

}  // namespace rotflow
