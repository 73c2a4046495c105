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

#include "rotflow/invariants.hpp"

#include <cmath>
#include <numbers>

#include "rotflow/error.hpp"
#include "rotflow/phase.hpp"
#include "rotflow/quadrature.hpp"

namespace rotflow {

namespace {

constexpr double pi = std::numbers::pi;
inline int sgn(double x) { return x < 0 ? -1 : 1; }

void check_theta(double theta) {
  if (!(theta > 0 && theta < pi) || std::sin(theta) == 0)
    fail(ErrorCode::domain, "invariants: theta on a pole");
}

struct FullCore {
  double L1, L2, L3, H, W, Q;
};

FullCore full_core(const State& st, double w) {
  const double s = std::sin(st.theta);
  // cos(pi/2) in double is 6e-17; snap it so the equator is exact.
  const double c = std::abs(std::cos(st.theta)) < 1e-15 ? 0.0 : std::cos(st.theta);
  const double Phi = st.phi + w * st.t;
  const double cP = std::cos(Phi), sP = std::sin(Phi);
  const double vw = st.v + w;
  FullCore f;
  f.L1 = -(vw * s * c * cP + st.u * sP);
  f.L2 = -(vw * s * c * sP - st.u * cP);
  f.L3 = s * s * vw;
  f.H = 0.5 * (st.u * st.u + s * s * vw * vw);
  f.W = std::sqrt(2 * f.H);
  // arcsin(c W / sqrt(2H - L3^2)) written with atan2; the argument itself
  // is only needed for the domain check.
  f.Q = std::atan2(c * f.W, s * std::abs(st.u));
  return f;
}

// Integral of a smooth periodic integrand over [0, t] in a few panels.
double time_quad(const std::function<double(double)>& g, double t) {
  if (t == 0) return 0;
  return quad::gauss_kronrod(g, 0, t, 1e-15, 1e-13).value;
}

}  // namespace

void InvariantSet::set(const std::string& name, double value, InvariantKind kind) {
  for (auto& e : entries)
    if (e.name == name) {
      e.value = value;
      e.kind = kind;
      return;
    }
  entries.push_back({name, value, kind});
}

double InvariantSet::get(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.value;
  fail(ErrorCode::invalid_argument, "no invariant named '" + name + "'");
}

bool InvariantSet::has(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return true;
  return false;
}

InvariantSet full_integrals(const State& st, Omega omega, int sigma) {
  check_theta(st.theta);
  const double w = omega.value;
  FullCore f = full_core(st, w);
  InvariantSet out;
  out.regime = Regime::FULL;
  out.set("L1", f.L1, InvariantKind::algebraic);
  out.set("L2", f.L2, InvariantKind::algebraic);
  out.set("L3", f.L3, InvariantKind::algebraic);
  out.set("H", f.H, InvariantKind::algebraic);
  if (sigma == 0) sigma = sgn(st.u);
  if (!(f.H > 0)) fail(ErrorCode::domain, "full integrals: 2H = 0, I1 and I2 undefined");
  const double s = std::sin(st.theta), c = std::cos(st.theta);
  const double den2 = 2 * f.H - f.L3 * f.L3;  // u^2 + s^2 c^2 (v + w)^2
  if (den2 > 0) {
    const double z = c * f.W / std::sqrt(den2);
    if (std::abs(z) > 1 + 1e-12) fail(ErrorCode::domain, "full integrals: Q argument outside [-1,1]");
  }
  out.set("Q", f.Q, InvariantKind::auxiliary);
  out.set("sigma", sigma, InvariantKind::auxiliary);
  const double I1 = st.t + sigma * f.Q / f.W;
  out.set("I1", I1, InvariantKind::transcendental);
  const double vw = st.v + w;
  const double num = s * c * vw;
  const double a1 = st.u != 0 ? std::atan(num / st.u) : (num == 0 ? 0.0 : sgn(num) * pi / 2);
  const double kappa = f.L3 / f.W;
  const double I2 = st.phi + w * st.t + a1 -
                    std::atan(sigma * kappa * std::tan(f.W * st.t + sigma * f.Q));
  out.set("I2", I2, InvariantKind::transcendental);
  out.set("K2", kappa * kappa, InvariantKind::algebraic);
  return out;
}

InvariantSet coriolis_integrals(const State& st, Omega omega, int sign_branch) {
  check_theta(st.theta);
  auto ph = phase::coriolis_phase(st, omega.value, sign_branch);
  InvariantSet out;
  out.regime = Regime::CORIOLIS;
  out.set("H", ph.H, InvariantKind::algebraic);
  out.set("L3", ph.L3, InvariantKind::algebraic);
  out.set("A_plus", ph.A_plus, InvariantKind::algebraic);
  out.set("A_minus", ph.A_minus, InvariantKind::algebraic);
  out.set("k", ph.k, InvariantKind::algebraic);
  out.set("P", ph.P_point, InvariantKind::transcendental);
  out.set("N", ph.N_point, InvariantKind::transcendental);
  if (ph.reciprocal) out.set("N_star", ph.N_star, InvariantKind::transcendental);
  return out;
}

InvariantSet rapid_integrals(const State& st, Omega omega) {
  check_theta(st.theta);
  const double w = omega.value, s = std::sin(st.theta);
  const double I1 = 0.5 * st.u * st.u - 0.5 * w * w * s * s;
  const double I2 = st.v + 2 * w * std::log(s);
  InvariantSet out;
  out.regime = Regime::RAPID;
  out.set("I1", I1, InvariantKind::algebraic);
  out.set("I2", I2, InvariantKind::algebraic);
  // k from the state directly: k + x^2 = u^2 / w^2.
  const double k = 2 * I1 / (w * w);
  out.set("k", k, InvariantKind::algebraic);
  if (k <= -1 && st.u == 0) return out;  // resting on the equator: no phase
  auto orb = phase::rapid_orbit(k, w);
  const double sb = sgn(std::cos(st.theta) * st.u);
  const double aw = std::abs(w);
  out.set("I3", orb.G(st.theta, st.u) - sb * aw * st.t, InvariantKind::transcendental);
  const double W = orb.phase(st.theta, st.u), t = st.t;
  const double lg = time_quad([&](double xi) { return std::log(orb.x2(W - aw * (t - xi))); }, t);
  out.set("I4", st.phi - I2 * t + w * lg, InvariantKind::transcendental);
  return out;
}

InvariantSet physical_rapid_integrals(const State& st, Omega omega) {
  check_theta(st.theta);
  const double w = omega.value, s = std::sin(st.theta);
  const double I1 = 0.5 * st.u * st.u - 0.5 * w * w * s * s;
  const double I2 = st.v + 2 * w * s;
  InvariantSet out;
  out.regime = Regime::PHYS_RAPID;
  out.set("I1", I1, InvariantKind::algebraic);
  out.set("I2", I2, InvariantKind::algebraic);
  const double k = 2 * I1 / (w * w);
  out.set("k", k, InvariantKind::algebraic);
  if (k <= -1 && st.u == 0) return out;  // resting on the equator: no phase
  auto orb = phase::rapid_orbit(k, w);
  const double sb = sgn(std::cos(st.theta) * st.u);
  const double aw = std::abs(w);
  out.set("I3", orb.G(st.theta, st.u) - sb * aw * st.t, InvariantKind::transcendental);
  const double W = orb.phase(st.theta, st.u), t = st.t;
  const double inv = time_quad([&](double xi) { return 1 / std::sqrt(orb.x2(W - aw * (t - xi))); }, t);
  out.set("I4", st.phi + 2 * w * t - I2 * inv, InvariantKind::transcendental);
  return out;
}

InvariantSet rapid_coriolis_integrals(const State& st, Omega omega, std::optional<double> xi_ref) {
  check_theta(st.theta);
  const double w = omega.value, s = std::sin(st.theta);
  const double I1 = 0.5 * st.u * st.u - w * (st.v + w) * s * s;
  const double I2 = st.v + 2 * w * std::log(s);
  InvariantSet out;
  out.regime = Regime::RAPID_CORIOLIS;
  out.set("I1", I1, InvariantKind::algebraic);
  out.set("I2", I2, InvariantKind::algebraic);
  // At rest on a double root of R the orbit is a point and has no phase.
  const double dR = 2 * w * (w + I2) * s - 2 * w * w * s * std::log(s * s) - 2 * w * w * s;
  if (st.u == 0 && std::abs(dR) <= 1e-14 * (1 + w * w)) return out;
  phase::CoriolisRapidOrbit orb(I1, I2, w, s);
  const double ref = xi_ref.value_or(0.5);
  if (ref < orb.xa() || ref > orb.xb())
    fail(ErrorCode::domain, "RAPID_CORIOLIS: G reference " + std::to_string(ref) +
                                " lies beyond the turning points [" + std::to_string(orb.xa()) +
                                ", " + std::to_string(orb.xb()) + "]");
  // G(x) = sqrt(2) (T(x) - T(ref)); the reference point is taken with u > 0.
  const double th_ref = std::asin(ref);
  const double uref = std::sqrt(std::max(0.0, 2 * orb.R(ref)));
  const double G = std::sqrt(2.0) * (orb.time_from_lower(st.theta, st.u) -
                                     orb.time_from_lower(th_ref, uref));
  const double sb = sgn(std::cos(st.theta) * st.u);
  out.set("I3", G - std::sqrt(2.0) * sb * st.t, InvariantKind::transcendental);
  const double ph = orb.phase(st.theta, st.u);
  const double I4 = st.phi - I2 * st.t + w * (orb.lambda(ph) - orb.lambda(ph - st.t));
  out.set("I4", I4, InvariantKind::transcendental);
  return out;
}

MechanicsSet mechanics(const State& st, Omega omega) {
  check_theta(st.theta);
  const double w = omega.value, s = std::sin(st.theta), s2 = s * s;
  MechanicsSet m;
  m.L = 0.5 * (st.u * st.u + s2 * st.v * st.v) + w * s2 * st.v;
  m.p_theta = st.u;
  m.p_phi = s2 * (st.v + w);
  m.E = 0.5 * (st.u * st.u + s2 * st.v * st.v);
  m.Hcan = m.p_theta * m.p_theta / 2 + m.p_phi * m.p_phi / (2 * s2) - w * m.p_phi + 0.5 * w * w * s2;
  return m;
}

double coriolis_i1_star(const State& st, Omega omega) {
  const double w = omega.value, s2 = std::sin(st.theta) * std::sin(st.theta);
  const double H = 0.5 * (st.u * st.u + s2 * st.v * st.v);
  const double L3 = s2 * (st.v + w);
  return H - w * L3;
}

InvariantSet evaluate_invariants(Regime r, const State& s, Omega omega) {
  switch (r) {
    case Regime::FULL: return full_integrals(s, omega);
    case Regime::CORIOLIS: return coriolis_integrals(s, omega);
    case Regime::RAPID: return rapid_integrals(s, omega);
    case Regime::RAPID_CORIOLIS: return rapid_coriolis_integrals(s, omega);
    case Regime::PHYS_RAPID: return physical_rapid_integrals(s, omega);
    case Regime::PHYS_FULL:
    case Regime::PHYS_CORIOLIS: {
      State c = s;
      c.v = s.v / std::sin(s.theta);
      auto out = r == Regime::PHYS_FULL ? full_integrals(c, omega) : coriolis_integrals(c, omega);
      out.regime = r;
      return out;
    }
  }
  fail(ErrorCode::invalid_argument, "unknown regime");
}

// ---------------------------------------------------------------------------

InvariantTracker::InvariantTracker(Regime r, Omega omega) : regime_(r), omega_(omega) {}

double InvariantTracker::unwrap(Wrap& w, double raw, double period) {
  if (!w.init || !(period > 0) || !std::isfinite(period)) {
    w.init = true;
    w.last = raw;
    return raw;
  }
  double v = raw + period * std::round((w.last - raw) / period);
  w.last = v;
  return v;
}

InvariantSet InvariantTracker::next(const State& s0) {
  State s = s0;
  Regime r = regime_;
  if (r == Regime::PHYS_FULL || r == Regime::PHYS_CORIOLIS) {
    s.v = s0.v / std::sin(s0.theta);
    r = r == Regime::PHYS_FULL ? Regime::FULL : Regime::CORIOLIS;
  }
  const double w = omega_.value;
  InvariantSet out;
  out.regime = regime_;
  switch (r) {
    case Regime::FULL: {
      check_theta(s.theta);
      FullCore f = full_core(s, w);
      if (!started_) sigma0_ = sgn(s.u);
      out.set("L1", f.L1, InvariantKind::algebraic);
      out.set("L2", f.L2, InvariantKind::algebraic);
      out.set("L3", f.L3, InvariantKind::algebraic);
      out.set("H", f.H, InvariantKind::algebraic);
      if (!(f.H > 0)) break;  // rest in the rotating frame: I1, I2 undefined
      const double I1raw = s.t + sgn(s.u) * f.Q / f.W;
      const double I1 = unwrap(w_i1_, I1raw, pi / f.W);
      out.set("I1", I1, InvariantKind::transcendental);
      const double sn = std::sin(s.theta), cs = std::cos(s.theta);
      const double J = unwrap(w_j_, s.phi + w * s.t + std::atan2(sn * cs * (s.v + w), s.u), pi);
      const double kappa = f.L3 / f.W;
      out.set("I2", J - std::atan(sigma0_ * kappa * std::tan(f.W * I1)), InvariantKind::transcendental);
      break;
    }
    case Regime::CORIOLIS: {
      check_theta(s.theta);
      auto ph = phase::coriolis_phase(s, w, 0);
      out.set("H", ph.H, InvariantKind::algebraic);
      out.set("L3", ph.L3, InvariantKind::algebraic);
      out.set("A_plus", ph.A_plus, InvariantKind::algebraic);
      out.set("A_minus", ph.A_minus, InvariantKind::algebraic);
      out.set("P", unwrap(w_p_, ph.P_canon, ph.P_period), InvariantKind::transcendental);
      out.set("N", unwrap(w_n_, ph.N_canon, ph.N_period), InvariantKind::transcendental);
      auto m = mechanics(s, omega_);
      out.set("Hcan", m.Hcan, InvariantKind::algebraic);
      break;
    }
    case Regime::RAPID:
    case Regime::PHYS_RAPID: {
      auto pw = r == Regime::RAPID ? rapid_integrals(s, omega_) : physical_rapid_integrals(s, omega_);
      const double k = pw.get("k");
      (void)k;
      const double I1 = pw.get("I1");
      auto orb = phase::rapid_orbit(2 * I1 / (w * w), w);
      const double W = orb.phase(s.theta, s.u);
      out.set("I1", I1, InvariantKind::algebraic);
      out.set("I2", pw.get("I2"), InvariantKind::algebraic);
      out.set("I3", unwrap(w_i3_, W - std::abs(w) * s.t, 4 * orb.quarter), InvariantKind::transcendental);
      out.set("I4", pw.get("I4"), InvariantKind::transcendental);
      break;
    }
    case Regime::RAPID_CORIOLIS: {
      check_theta(s.theta);
      const double sn = std::sin(s.theta);
      const double I1 = 0.5 * s.u * s.u - w * (s.v + w) * sn * sn;
      const double I2 = s.v + 2 * w * std::log(sn);
      phase::CoriolisRapidOrbit orb(I1, I2, w, sn);
      const double ph = orb.phase(s.theta, s.u);
      out.set("I1", I1, InvariantKind::algebraic);
      out.set("I2", I2, InvariantKind::algebraic);
      const double per = orb.periodic() ? std::sqrt(2.0) * orb.period() : 0;
      out.set("I3", unwrap(w_i3_, std::sqrt(2.0) * (ph - s.t), per), InvariantKind::transcendental);
      out.set("I4", s.phi - I2 * s.t + w * (orb.lambda(ph) - orb.lambda(ph - s.t)),
              InvariantKind::transcendental);
      break;
    }
    default:
      fail(ErrorCode::invalid_argument, "tracker: unsupported regime");
  }
  started_ = true;
  return out;
}

}  // namespace rotflow
