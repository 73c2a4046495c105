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

#include "rotflow/hodograph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rotflow/error.hpp"
#include "rotflow/invariants.hpp"
#include "rotflow/roots.hpp"

namespace rotflow {

namespace {

constexpr double pi = std::numbers::pi;

InvariantSet named_set(const HodographProblem& p, const State& s) {
  if (p.regime == Regime::FULL) return full_integrals(s, p.omega, p.sigma);
  return evaluate_invariants(p.regime, s, p.omega);
}

}  // namespace

HodographProblem HodographProblem::simple(Omega w, int sigma, LinearPsi p1, LinearPsi p2) {
  HodographProblem p;
  p.omega = w;
  p.sigma = sigma;
  p.psi1 = p1;
  p.psi2 = p2;
  return p;
}

HodographProblem HodographProblem::single_valued(Omega w, int sigma, LinearPsi p1, LinearPsi p2) {
  HodographProblem p = simple(w, sigma, p1, p2);
  p.J1 = "I2";
  p.sin1 = true;
  return p;
}

HodographProblem HodographProblem::coriolis(Omega w, LinearPsi p1, LinearPsi p2) {
  HodographProblem p;
  p.regime = Regime::CORIOLIS;
  p.omega = w;
  p.J1 = "P";
  p.J2 = "N";
  p.X = "H";
  p.Y = "L3";
  p.psi1 = p1;
  p.psi2 = p2;
  return p;
}

HodographProblem HodographProblem::rapid(Regime r, Omega w, LinearPsi p1, LinearPsi p2) {
  if (r != Regime::RAPID && r != Regime::RAPID_CORIOLIS && r != Regime::PHYS_RAPID)
    fail(ErrorCode::invalid_argument, "rapid hodograph needs a rapid regime");
  HodographProblem p;
  p.regime = r;
  p.omega = w;
  p.J1 = "I3";
  p.J2 = "I4";
  p.X = "I1";
  p.Y = "I2";
  p.psi1 = p1;
  p.psi2 = p2;
  return p;
}

HodographProblem HodographProblem::angmom(Omega w, Fn1 f1, Fn1 f2) {
  HodographProblem p;
  p.kind = Kind::angmom;
  p.omega = w;
  p.F1 = std::move(f1);
  p.F2 = std::move(f2);
  return p;
}

std::array<double, 2> HodographProblem::residual(double t, double theta, double phi, double u,
                                                 double v) const {
  if (kind == Kind::angmom) {
    const double s = std::sin(theta), c = std::cos(theta), P = phi + omega.value * t;
    const double vw = v + omega.value, xi = vw * s * s;
    return {vw * s * c * std::cos(P) + u * std::sin(P) - F1(xi),
            vw * s * c * std::sin(P) - u * std::cos(P) - F2(xi)};
  }
  const State st{t, theta, phi, u, v};
  InvariantSet set = named_set(*this, st);
  const double X_ = set.get(X), Y_ = set.get(Y);
  double j1 = set.get(J1), j2 = set.get(J2);
  if (sin1) j1 = std::sin(j1);
  if (sin2) j2 = std::sin(j2);
  return {j1 - psi1(X_, Y_), j2 - psi2(X_, Y_)};
}

double HodographProblem::det_m(double t, double theta, double phi, double u, double v) const {
  auto J = roots::jacobian_fd(
      [&](const std::array<double, 2>& x) { return residual(t, theta, phi, x[0], x[1]); }, {u, v});
  return J[0] * J[3] - J[1] * J[2];
}

PointSolution solve_pointwise(const HodographProblem& p, double t, double theta, double phi,
                              std::array<double, 2> guess, double tol) {
  auto f = [&](const std::array<double, 2>& x) { return p.residual(t, theta, phi, x[0], x[1]); };
  roots::Newton2Result r;
  try {
    // Aim below the requested tolerance so the returned point is polished.
    r = roots::newton2(f, guess, tol * 1e-3);
  } catch (const NoConvergenceError& e) {
    if (!(e.best_residual() <= tol)) throw;
    r = roots::newton2(f, guess, tol);
  }
  PointSolution out;
  out.u = r.x[0];
  out.v = r.x[1];
  out.residual = r.residual;
  out.iterations = r.iterations;
  out.det_m = p.det_m(t, theta, phi, out.u, out.v);
  if (std::abs(out.det_m) < 1e-12)
    fail(ErrorCode::singular_jacobian, "hodograph: det M vanishes at the root");
  out.near_singular = std::abs(out.det_m) < 1e-6;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// arcsin(c W / sqrt(W^2 - c2^2)) in the cancellation-free atan2 form.
double const_Q(double c2, double s, double c, double W) {
  return std::atan2(c * W, std::sqrt(std::max(0.0, s * s * W * W - c2 * c2)));
}

}  // namespace

ConstPoint family_const(double c1, double c2, int sigma, double t, double theta, Omega omega) {
  const double s = std::sin(theta), c = std::cos(theta);
  if (s == 0) fail(ErrorCode::domain, "family_const: pole");
  const double tt = t - c1;
  const double sg = sigma < 0 ? -1 : 1;
  if (tt == 0) fail(ErrorCode::no_root, "family_const: t = c1 leaves W undetermined");
  const double W0 = std::abs(c2) / s;
  double W;
  if (c2 == 0) {
    W = -sg * (pi / 2 - theta) / tt;
    if (!(W >= 0)) fail(ErrorCode::no_root, "family_const: no positive W for this sigma");
  } else {
    auto g = [&](double w) { return tt * w + sg * const_Q(c2, s, c, w); };
    const double Wmax = std::max(W0 * 2, W0 + pi / (2 * std::abs(tt))) * 1.01;
    auto rs = roots::all_roots(g, W0 * (1 + 1e-12), Wmax, 400);
    if (rs.empty()) fail(ErrorCode::no_root, "family_const: no real W");
    W = rs.front();
  }
  const double u2 = W * W - c2 * c2 / (s * s);
  const double u = sg * std::sqrt(std::max(0.0, u2));
  return {u, c2 / (s * s) - omega.value, W};
}

double family_const_di1_du(double c2, int sigma, double theta, double W) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double sg = sigma < 0 ? -1 : 1;
  const double Q = const_Q(c2, s, c, W);
  const double d = std::sqrt(std::max(0.0, s * s * W * W - c2 * c2));
  const double dQ = -c * c2 * c2 / ((W * W - c2 * c2) * d);
  const double dI1_dW = sg * (dQ * W - Q) / (W * W);
  const double u = sg * std::sqrt(std::max(0.0, W * W - c2 * c2 / (s * s)));
  return dI1_dW * u / W;
}

LinearPoint family_linear(const LinearCoeffs& k, int branch, double t, double theta, double phi,
                          Omega omega) {
  const double s = std::sin(theta), c = std::cos(theta), P = phi + omega.value * t;
  const double cP = std::cos(P), sP = std::sin(P);
  const double A = s * s + k.a2 * s * c * cP + k.b2 * s * c * sP;
  const double B = -k.a2 * sP + k.b2 * cP;
  if (std::abs(A) < 1e-14) fail(ErrorCode::domain, "family_linear: A = 0");
  const double alpha = k.a1 * sP - k.b1 * cP + (B / A) * s * c * (k.a1 * cP + k.b1 * sP);
  const double D = std::sqrt(A * A + B * B * s * s);
  const double Q = std::atan2(c * D, std::abs(A) * s);
  const double beta = std::abs(A) * Q / D;
  const double tt = t - k.c1;
  LinearPoint out{0, 0, alpha, beta, tt * tt - 4 * alpha * beta};
  double u;
  if (std::abs(alpha) <= 1e-14 * std::max(1.0, std::abs(tt))) {
    if (tt == 0) fail(ErrorCode::no_root, "family_linear: degenerate equation");
    u = -beta / tt;
  } else {
    if (out.discriminant < 0) fail(ErrorCode::complex_root, "family_linear: complex roots");
    const double sq = std::sqrt(out.discriminant);
    // Stable pair: q / alpha and beta / q.
    const double q = -0.5 * (tt + (tt >= 0 ? sq : -sq));
    const double r_minus = tt >= 0 ? q / alpha : beta / q;
    const double r_plus = tt >= 0 ? beta / q : q / alpha;
    u = branch >= 0 ? r_plus : r_minus;
    if (q == 0) u = 0;
  }
  out.u = u;
  out.v = -omega.value + (B / A) * u;
  return out;
}

FieldValue family_angmom(const AngmomSpec& sp, double t, double theta, double phi, Omega omega) {
  const double s = std::sin(theta), c = std::cos(theta), P = phi + omega.value * t;
  const double cP = std::cos(P), sP = std::sin(P);
  const double w = omega.value;
  switch (sp.kind) {
    case AngmomSpec::Kind::linear: {
      const double Bl = sp.b1 * cP + sp.b2 * sP;
      const double den = c - Bl * s;
      if (std::abs(den) < 1e-14 || std::abs(c) < 1e-14)
        fail(ErrorCode::domain, "family_angmom: singular locus");
      const double num = sp.a1 * cP + sp.a2 * sP;
      const double u = sp.a1 * sP - sp.a2 * cP + num * (sp.b1 * sP - sp.b2 * cP) * s / den;
      const double v = -w + num / (s * den);
      return {u, v};
    }
    case AngmomSpec::Kind::inverse: {
      const double R = std::hypot(sp.a, sp.b);
      if (R == 0) fail(ErrorCode::domain, "family_angmom: a = b = 0");
      const double alpha = std::atan2(sp.a / R, sp.b / R);
      const double S = std::sin(P + alpha);
      if (std::abs(S) < 1e-14 || std::abs(c) < 1e-14)
        fail(ErrorCode::domain, "family_angmom: singular locus");
      const double xi = sp.F.inverse((c / s) / (R * S));
      const double u = -xi * (c / s) * std::cos(P + alpha) / S;
      return {u, -w + xi / (s * s)};
    }
    case AngmomSpec::Kind::generic: {
      if (std::abs(c) < 1e-14) fail(ErrorCode::domain, "family_angmom: equator");
      auto g = [&](double xi) { return xi * c / s - sp.F1(xi) * cP - sp.F2(xi) * sP; };
      auto rs = roots::all_roots(g, sp.xi_lo, sp.xi_hi, 2000);
      if (rs.empty()) fail(ErrorCode::no_root, "family_angmom: no root in the xi bracket");
      double xi = rs.front();
      for (double r : rs)
        if (std::abs(r - sp.xi_hint) < std::abs(xi - sp.xi_hint)) xi = r;
      const double u = sp.F1(xi) * sP - sp.F2(xi) * cP;
      return {u, xi / (s * s) - w};
    }
  }
  return {0, 0};
}

FieldValue constant_L3_solution(double A, Omega omega, double theta, int branch) {
  const double s = std::sin(theta), w = omega.value;
  const double rad = A - w * w / (s * s);
  if (rad < 0) fail(ErrorCode::domain, "constant_L3_solution: A < omega^2 / sin^2(theta)");
  const double c = std::cos(theta);
  return {(branch >= 0 ? 1 : -1) * std::sqrt(rad), w * (c * c) / (s * s)};
}

double coriolis_constraint(const Fn1& Phi, double theta, double v, Omega omega) {
  const double s2 = std::sin(theta) * std::sin(theta);
  const double u2 = -v * v * s2 + 2 * Phi((v + omega.value) * s2);
  if (u2 < 0) fail(ErrorCode::negative_radicand, "coriolis_constraint: u^2 < 0");
  return u2;
}

double rapid_coriolis_constraint(const Fn1& Phi, double theta, double v, Omega omega) {
  const double s = std::sin(theta), w = omega.value;
  const double u2 = 2 * w * (v + w) * s * s + 2 * Phi(v + 2 * w * std::log(s));
  if (u2 < 0) fail(ErrorCode::negative_radicand, "rapid_coriolis_constraint: u^2 < 0");
  return u2;
}

// ---------------------------------------------------------------------------

FieldPtr make_const_field(double c1, double c2, int sigma, Omega omega) {
  return make_analytic_field(
      "family_const", omega, Regime::FULL,
      [=](double t, double th, double) {
        auto p = family_const(c1, c2, sigma, t, th, omega);
        return FieldValue{p.u, p.v};
      },
      {{"c1", c1}, {"c2", c2}, {"sigma", sigma}});
}

FieldPtr make_linear_field(const LinearCoeffs& k, int branch, Omega omega) {
  return make_analytic_field(
      "family_linear", omega, Regime::FULL,
      [=](double t, double th, double ph) {
        auto p = family_linear(k, branch, t, th, ph, omega);
        return FieldValue{p.u, p.v};
      },
      {{"a1", k.a1}, {"b1", k.b1}, {"a2", k.a2}, {"b2", k.b2}, {"c1", k.c1}, {"branch", branch}});
}

FieldPtr make_angmom_field(const AngmomSpec& s, Omega omega) {
  std::vector<std::pair<std::string, double>> params;
  if (s.kind == AngmomSpec::Kind::linear)
    params = {{"a1", s.a1}, {"b1", s.b1}, {"a2", s.a2}, {"b2", s.b2}};
  else if (s.kind == AngmomSpec::Kind::inverse)
    params = {{"a", s.a}, {"b", s.b}};
  return make_analytic_field(
      "family_angmom", omega, Regime::FULL,
      [=](double t, double th, double ph) { return family_angmom(s, t, th, ph, omega); }, params);
}

FieldPtr make_constant_L3_field(double A, Omega omega, int branch) {
  return make_analytic_field(
      "constant_L3", omega, Regime::FULL,
      [=](double, double th, double) { return constant_L3_solution(A, omega, th, branch); },
      {{"A", A}, {"branch", branch}});
}

FieldPtr make_rapid_coriolis_stationary_field(const Fn1& Phi, double a, Omega omega) {
  const double w = omega.value;
  return make_analytic_field(
      "rapid_coriolis_stationary", omega, Regime::RAPID_CORIOLIS,
      [=](double, double th, double) {
        const double s = std::sin(th);
        const double v = a - 2 * w * std::log(s);
        const double u2 = 2 * Phi(a) + 2 * w * (w + a - 2 * w * std::log(s)) * s * s;
        if (u2 < 0) fail(ErrorCode::negative_radicand, "rapid_coriolis_stationary: u^2 < 0");
        return FieldValue{std::sqrt(u2), v};
      },
      {{"a", a}});
}

FieldPtr make_hodograph_field(const HodographProblem& p,
                              std::function<std::array<double, 2>(double, double, double)> guess,
                              std::string family) {
  return make_analytic_field(
      std::move(family), p.omega, p.regime,
      [p, guess](double t, double th, double ph) {
        auto r = solve_pointwise(p, t, th, ph, guess(t, th, ph), 1e-12);
        return FieldValue{r.u, r.v};
      });
}

}  // namespace rotflow
