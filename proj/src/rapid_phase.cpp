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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rotflow/elliptic.hpp"
#include "rotflow/error.hpp"
#include "rotflow/phase.hpp"
#include "rotflow/quadrature.hpp"
#include "rotflow/roots.hpp"

namespace rotflow::phase {

namespace el = rotflow::elliptic;

namespace {
constexpr double pi = std::numbers::pi;
inline int sgn(double x) { return x < 0 ? -1 : 1; }
}  // namespace

// ---------------------------------------------------------------------------
// CORIOLIS

CoriolisPhase coriolis_phase(const State& st, double w, int sb) {
  if (w == 0) fail(ErrorCode::domain, "CORIOLIS phase needs omega != 0");
  const double s = std::sin(st.theta), x = std::cos(st.theta);
  const double u = st.u, v = st.v, aw = std::abs(w);
  CoriolisPhase out{};
  out.H = 0.5 * (u * u + s * s * v * v);
  out.L3 = s * s * (v + w);
  const double H = out.H, L3 = out.L3;
  const double b = 2 * w * w - 2 * H - 2 * w * L3;
  const double c = 2 * H + 2 * w * L3 - L3 * L3 - w * w;
  // Roots of w^2 y^2 - b y - c = 0 without cancellation.
  const double disc = std::sqrt(std::max(0.0, b * b + 4 * w * w * c));
  double Ap, Am;
  if (b >= 0) {
    Ap = (b + disc) / (2 * w * w);
    Am = Ap != 0 ? -c / (w * w * Ap) : 0;
  } else {
    Am = (b - disc) / (2 * w * w);
    Ap = -c / (w * w * Am);
  }
  out.A_plus = Ap;
  out.A_minus = Am;
  if (!(Ap > 0)) fail(ErrorCode::domain, "CORIOLIS integrals: A+ <= 0");
  if (sb == 0) sb = sgn(x * u);

  // d1 = A+ - x^2, d2 = x^2 - A-, with d1 d2 = s^2 u^2 / w^2.
  const double spread = Ap - Am;
  double d1 = Ap - x * x, d2 = x * x - Am;
  const double prod = s * s * u * u / (w * w);
  if (d1 < d2) d1 = prod / std::max(d2, std::numeric_limits<double>::min());
  else d2 = prod / std::max(d1, std::numeric_limits<double>::min());
  d1 = std::max(d1, 0.0);
  d2 = std::max(d2, 0.0);

  const double t = st.t, Phi = st.phi + w * t;
  // Phase rate of the Jacobi argument used below.
  if (Am > 0) {
    const double k = std::sqrt(spread / Ap);
    out.k = k;
    out.reciprocal = false;
    const double sp = std::sqrt(d1 / spread), cp = std::sqrt(d2 / spread);
    const double delta2 = x * x / Ap;
    const double F = el::ellint_f_sc(sp, cp, delta2);
    const double K = el::complete_k(k);
    const double rate = aw * std::sqrt(Ap);
    out.P_point = F - sb * rate * t;
    const double y = sb > 0 ? F : 2 * K - F;
    out.P_canon = y - rate * t;
    out.P_period = 2 * K;
    if (L3 == 0) {
      out.N_point = out.N_canon = Phi;
      out.N_period = 2 * pi;
    } else {
      const double alpha2 = spread / (Ap - 1);
      const double C = L3 / ((1 - Ap) * rate);
      const double Pi = el::ellint_pi_sc(sp, cp, delta2, alpha2);
      const double Pic = el::complete_pi(alpha2, k);
      out.N_point = Phi - sb * C * Pi;
      out.N_canon = Phi - C * (sb > 0 ? Pi : 2 * Pic - Pi);
      out.N_period = std::abs(2 * C * Pic);
    }
    out.N_star = out.N_point;
    return out;
  }

  // Modulus above one: x = sqrt(A+) cn(z, k1), z advancing at |w| sqrt(A+ - A-).
  const double k = std::sqrt(spread / Ap), k1 = 1 / k;
  out.k = k;
  out.reciprocal = true;
  const double rate_z = aw * std::sqrt(spread);
  const double rate = aw * std::sqrt(Ap);
  // Amplitude of z: sin = sign(u) sqrt(d1/A+), cos = x / sqrt(A+).
  const double psi_star = std::atan2(sgn(u) * std::sqrt(d1), x);
  const double K1 = el::complete_k(k1);
  double z = el::ellint_f(psi_star, k1).value;
  if (z < 0) z += 4 * K1;
  out.P_canon = k1 * (z - rate_z * t);
  out.P_period = 4 * K1 * k1;
  // Pointwise P through F(phi, k) with k > 1 (reciprocal route).
  const double sphi = std::sqrt(d1 / spread);
  const double phi_g = std::asin(std::min(1.0, sphi));
  out.P_point = el::ellint_f(phi_g, k).value - sb * rate * t;
  if (L3 == 0) {
    out.N_point = out.N_canon = out.N_star = Phi;
    out.N_period = 2 * pi;
    return out;
  }
  const double alpha2 = spread / (Ap - 1);
  const double C = L3 / ((1 - Ap) * rate);
  out.N_point = Phi - sb * C * el::ellint_pi(phi_g, alpha2, k).value;
  const double nstar = Ap / (Ap - 1);
  const double Cstar = L3 / ((1 - Ap) * rate_z);
  // psi with sin(psi) = k sin(phi_g) = sqrt(d1/A+), cos = |x|/sqrt(A+).
  const double psi = std::atan2(std::sqrt(d1), std::abs(x));
  out.N_star = Phi - sb * Cstar * el::ellint_pi(psi, nstar, k1).value;
  double Piz = el::ellint_pi(psi_star, nstar, k1).value;
  const double Pic = el::complete_pi(nstar, k1);
  if (psi_star < 0) Piz += 4 * Pic;
  out.N_canon = Phi - Cstar * Piz;
  out.N_period = std::abs(4 * Cstar * Pic);
  return out;
}

// ---------------------------------------------------------------------------
// RAPID

RapidOrbit rapid_orbit(double k, double omega) {
  if (omega == 0) fail(ErrorCode::domain, "rapid integrals need omega != 0");
  if (k == 0) fail(ErrorCode::domain, "rapid integrals: k = 0 (separatrix)");
  if (!(k > -1)) fail(ErrorCode::domain, "rapid integrals: k <= -1");
  RapidOrbit o{k, omega, 0, 0};
  if (k > 0) {
    o.modulus = 1 / std::sqrt(1 + k);
    o.quarter = o.modulus * el::complete_k(o.modulus);
  } else {
    o.modulus = std::sqrt(1 + k);
    o.quarter = el::complete_k(o.modulus);
  }
  return o;
}

double RapidOrbit::G(double theta, double u) const {
  const double x = std::sin(theta), c = std::abs(std::cos(theta));
  if (x <= 0) fail(ErrorCode::domain, "rapid integrals at a pole");
  const double aw = std::abs(omega);
  if (k > 0) {
    const double a = std::sqrt(1 + k) * x, b = std::sqrt(k) * c;
    const double r = std::hypot(a, b);
    return modulus * el::ellint_f_sc(a / r, b / r, k / (r * r));
  }
  const double a = std::abs(u) / aw, b = std::sqrt(-k) * c;
  const double r = std::hypot(a, b);
  return el::ellint_f_sc(a / r, b / r, std::max(0.0, -k / (x * x)));
}

double RapidOrbit::phase(double theta, double u) const {
  const double g = G(theta, u);
  const bool north = std::cos(theta) > 0;
  const bool up = std::cos(theta) * u >= 0;  // x increasing
  const double q = quarter;
  if (north && up) return g;
  if (!north && !up) return 2 * q - g;
  if (!north && up) return 2 * q + g;
  return 4 * q - g;
}

double RapidOrbit::x2(double W) const {
  if (k > 0) {
    auto j = el::jacobi_sn_cn_dn(std::sqrt(1 + k) * W, modulus);
    const double sn2 = j.sn * j.sn;
    return k * sn2 / (1 + k - sn2);
  }
  auto j = el::jacobi_sn_cn_dn(W, modulus);
  return -k / (j.dn * j.dn);
}

// ---------------------------------------------------------------------------
// RAPID_CORIOLIS

CoriolisRapidOrbit::CoriolisRapidOrbit(double I1, double I2, double omega, double x_hint)
  : I1_(I1), I2_(I2), w_(omega) {
  if (omega == 0) fail(ErrorCode::domain, "RAPID_CORIOLIS integrals need omega != 0");
  const double w = omega;
  auto Ry = [=](double y) {
    if (y <= 0) return I1;
    return I1 + y * (w * w + w * I2) - w * w * y * std::log(y);
  };
  const double tiny = 1e-300;
  double ym = std::exp(std::clamp(I2 / w, -690.0, 0.0));
  const double y0 = std::clamp(x_hint * x_hint, tiny, 1.0);
  if (Ry(ym) < 0 && Ry(y0) >= 0) ym = y0;
  if (Ry(ym) < 0) fail(ErrorCode::domain, "RAPID_CORIOLIS integrals: no admissible motion");

  if (I1 > 0) {
    xa_ = 0;
    lower_turning_ = false;
  } else {
    double ya = roots::brent(Ry, tiny, ym, 1e-18);
    xa_ = std::sqrt(ya);
    lower_turning_ = xa_ > 0;
  }
  if (Ry(1.0) >= 0) {
    xb_ = 1;
    equator_ = true;
  } else {
    double yb = roots::brent(Ry, ym, 1.0, 1e-18);
    xb_ = std::sqrt(yb);
    equator_ = false;
  }
  auto dR = [=](double x) { return 2 * x * w * (I2 - w * std::log(x * x)); };
  slope_a_ = lower_turning_ ? dR(xa_) : 0;
  slope_b_ = equator_ ? 0 : -dR(xb_);
  Ta_ = T_chi(pi / 2);
  Hb_ = Hlog_chi(pi / 2);
}

double CoriolisRapidOrbit::R(double x) const {
  if (x == 0) return I1_;
  const double x2 = x * x;
  return I1_ + w_ * (w_ + I2_) * x2 - w_ * w_ * x2 * std::log(x2);
}

// R measured from a root x0 of R, written without the cancellation of the
// direct form.  dy = x^2 - x0^2 is passed separately since it is known
// more accurately than the difference of squares.
double CoriolisRapidOrbit::R_from(double x0, double dy) const {
  const double y0 = x0 * x0, y = y0 + dy;
  const double w2 = w_ * w_;
  return dy * (w_ * (w_ + I2_) - w2 * std::log(y0)) - w2 * y * std::log1p(dy / y0);
}

double CoriolisRapidOrbit::R_near(double da, double db) const {
  if (lower_turning_ && da <= db) return R_from(xa_, da * (2 * xa_ + da));
  if (!equator_ && db < da) return R_from(xb_, -db * (2 * xb_ - db));
  return R(xa_ + da);
}

double CoriolisRapidOrbit::integrand_chi(double psi, bool weighted) const {
  const double span = xb_ - xa_;
  const double sp = std::sin(psi), cp = std::cos(psi);
  const double da = span * sp * sp, db = span * cp * cp;
  const double xi = xa_ + da;
  const double r = R_near(da, db);
  const double one_minus = equator_ ? db : 1 - xi;
  const double rad = 2 * one_minus * (1 + xi) * r;
  if (!(rad > 0)) {
    if (sp == 0 || cp == 0) return 0;
    fail(ErrorCode::quadrature_failure, "RAPID_CORIOLIS: radicand not positive inside orbit");
  }
  double g = 2 * span * sp * cp / std::sqrt(rad);
  if (weighted) g *= std::log(xi * xi);
  return g;
}

double CoriolisRapidOrbit::T_chi(double chi) const {
  if (chi <= 0) return 0;
  return quad::gauss_kronrod([this](double p) { return integrand_chi(p, false); }, 0, chi,
                             1e-15, 1e-13).value;
}

double CoriolisRapidOrbit::Hlog_chi(double chi) const {
  if (chi <= 0) return 0;
  return quad::gauss_kronrod([this](double p) { return integrand_chi(p, true); }, 0, chi,
                             1e-15, 1e-13).value;
}

double CoriolisRapidOrbit::chi_of(double theta, double u) const {
  const double x = std::sin(theta), c = std::cos(theta);
  const double span = xb_ - xa_;
  double da = lower_turning_ ? x - xa_ : x;
  double db = equator_ ? c * c / (1 + x) : xb_ - x;
  // Near a turning point R = u^2/2 pins the distance better than x does.
  // Newton on the cancellation-free R, started from the quadratic model.
  const double target = 0.5 * u * u;
  auto d2R = [this](double xx) { return 2 * w_ * (I2_ - w_ * std::log(xx * xx)) - 4 * w_ * w_; };
  auto refine = [&](double x0, double slope, int dir, double d) {
    double q = slope * slope + 2 * d2R(x0) * target * dir * dir;
    if (q > 0 && slope > 0) d = 2 * target / (slope + std::sqrt(q));
    for (int it = 0; it < 8; ++it) {
      const double xx = x0 + dir * d;
      const double f = R_from(x0, dir * d * (2 * x0 + dir * d)) - target;
      const double fp = dir * 2 * xx * w_ * (I2_ - w_ * std::log(xx * xx));
      if (!(fp > 0)) break;
      const double step = f / fp;
      d -= step;
      if (std::abs(step) <= 1e-16 * std::max(d, 1e-300)) break;
    }
    return d;
  };
  if (lower_turning_ && da < 1e-3 * span) da = refine(xa_, slope_a_, 1, da);
  else if (!equator_ && db < 1e-3 * span) db = refine(xb_, slope_b_, -1, db);
  da = std::clamp(da, 0.0, span);
  db = std::clamp(db, 0.0, span);
  return std::atan2(std::sqrt(da), std::sqrt(db));
}

double CoriolisRapidOrbit::time_from_lower(double theta, double u) const {
  return T_chi(chi_of(theta, u));
}

double CoriolisRapidOrbit::log_from_lower(double theta, double u) const {
  return Hlog_chi(chi_of(theta, u));
}

double CoriolisRapidOrbit::phase(double theta, double u) const {
  const double tau = time_from_lower(theta, u);
  const bool north = std::cos(theta) > 0;
  const bool up = std::cos(theta) * u >= 0;
  if (!equator_) return up ? tau : 2 * Ta_ - tau;
  if (north && up) return tau;
  if (!north && !up) return 2 * Ta_ - tau;
  if (!north && up) return 2 * Ta_ + tau;
  return 4 * Ta_ - tau;
}

double CoriolisRapidOrbit::chi_of_time(double tau) const {
  if (tau <= 0) return 0;
  if (tau >= Ta_) return pi / 2;
  double lo = 0, hi = pi / 2;
  double chi = pi / 2 * tau / Ta_;
  double T = T_chi(chi);
  for (int it = 0; it < 60; ++it) {
    double f = T - tau;
    if (std::abs(f) <= 1e-14 * std::max(1.0, Ta_)) break;
    if (f > 0) hi = chi; else lo = chi;
    double g = integrand_chi(chi, false);
    double next = (g > 0) ? chi - f / g : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    // Advance T incrementally over the short Newton step.
    double dT = quad::gauss_kronrod([this](double p) { return integrand_chi(p, false); }, chi,
                                    next, 1e-16, 1e-13).value;
    T += dT;
    chi = next;
    if (hi - lo < 1e-16) break;
  }
  return chi;
}

double CoriolisRapidOrbit::lambda(double s) const {
  const double P = period();
  double base = 0, r = s;
  if (periodic()) {
    double n = std::floor(s / P);
    r = s - n * P;
    base = n * log_per_period();
  } else if (s < -1e-9 * P || s > P * (1 + 1e-9)) {
    fail(ErrorCode::domain, "RAPID_CORIOLIS: phase outside the pole-to-pole orbit");
  }
  r = std::clamp(r, 0.0, P);
  const double Ta = Ta_, Hb = Hb_;
  if (!equator_) {
    if (r <= Ta) return base + Hlog_chi(chi_of_time(r));
    return base + 2 * Hb - Hlog_chi(chi_of_time(2 * Ta - r));
  }
  if (r <= Ta) return base + Hlog_chi(chi_of_time(r));
  if (r <= 2 * Ta) return base + 2 * Hb - Hlog_chi(chi_of_time(2 * Ta - r));
  if (r <= 3 * Ta) return base + 2 * Hb + Hlog_chi(chi_of_time(r - 2 * Ta));
  return base + 4 * Hb - Hlog_chi(chi_of_time(4 * Ta - r));
}

}  // namespace rotflow::phase
