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

#include "rotflow/euler.hpp"

#include <cmath>
#include <numbers>

#include "rotflow/error.hpp"

namespace rotflow {

namespace {
constexpr double two_pi = 2 * std::numbers::pi;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::FULL: return "FULL";
    case Regime::CORIOLIS: return "CORIOLIS";
    case Regime::RAPID: return "RAPID";
    case Regime::RAPID_CORIOLIS: return "RAPID_CORIOLIS";
    case Regime::PHYS_FULL: return "PHYS_FULL";
    case Regime::PHYS_CORIOLIS: return "PHYS_CORIOLIS";
    case Regime::PHYS_RAPID: return "PHYS_RAPID";
  }
  return "?";
}

Regime regime_from_name(const std::string& name) {
  for (Regime r : {Regime::FULL, Regime::CORIOLIS, Regime::RAPID, Regime::RAPID_CORIOLIS,
                   Regime::PHYS_FULL, Regime::PHYS_CORIOLIS, Regime::PHYS_RAPID})
    if (name == regime_name(r)) return r;
  fail(ErrorCode::config, "unknown regime '" + name + "'");
}

bool is_physical(Regime r) {
  return r == Regime::PHYS_FULL || r == Regime::PHYS_CORIOLIS || r == Regime::PHYS_RAPID;
}

double State::phi_reduced() const {
  double p = std::fmod(phi, two_pi);
  if (p < 0) p += two_pi;
  if (p >= two_pi) p = 0;
  return p;
}

long State::winding() const { return static_cast<long>(std::floor(phi / two_pi)); }

Force force(Regime r, double theta, double u, double v, Omega omega) {
  const double s = std::sin(theta), c = std::cos(theta);
  if (s == 0 || !(theta > 0 && theta < std::numbers::pi))
    fail(ErrorCode::domain, "force: theta on a pole");
  const double w = omega.value, cot = c / s;
  switch (r) {
    case Regime::FULL:
      return {s * c * (v + w) * (v + w), -2 * cot * u * (v + w)};
    case Regime::CORIOLIS:
      return {s * c * v * (v + 2 * w), -2 * cot * u * (v + w)};
    case Regime::RAPID:
      return {w * w * s * c, -2 * w * u * cot};
    case Regime::RAPID_CORIOLIS:
      return {2 * v * w * s * c, -2 * w * u * cot};
    case Regime::PHYS_FULL:
      return {(v + w * s) * (v + w * s) * cot, -u * (v + 2 * w * s) * cot};
    case Regime::PHYS_CORIOLIS:
      return {v * (v + 2 * w * s) * cot, -u * (v + 2 * w * s) * cot};
    case Regime::PHYS_RAPID:
      return {w * w * s * c, -2 * u * w * c};
  }
  return {0, 0};
}

double phi_rate(Regime r, double theta, double v) {
  return is_physical(r) ? v / std::sin(theta) : v;
}

}  // namespace rotflow
