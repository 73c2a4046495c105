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

#include "rotflow/reduction.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rotflow/elliptic.hpp"
#include "rotflow/error.hpp"
#include "rotflow/ode.hpp"
#include "rotflow/roots.hpp"

namespace rotflow {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double pick_root(const std::vector<double>& rs, const RootSearch& s, const char* who) {
  if (rs.empty()) fail(ErrorCode::no_root, std::string(who) + ": no root in the bracket");
  switch (s.pick) {
    case RootSearch::Pick::unique:
      if (rs.size() > 1) throw MultipleRootsError(std::string(who) + ": several roots", rs);
      return rs.front();
    case RootSearch::Pick::smallest: return rs.front();
    case RootSearch::Pick::nearest: {
      double best = rs.front();
      for (double r : rs)
        if (std::abs(r - s.hint) < std::abs(best - s.hint)) best = r;
      return best;
    }
  }
  return rs.front();
}

// Exceptions inside a scan become NaN so the cell is skipped.
std::function<double(double)> guarded(std::function<double(double)> f) {
  return [f](double x) {
    try {
      return f(x);
    } catch (const Error&) {
      return nan;
    }
  };
}

}  // namespace

ScalarRoot hopf_solve(const Fn2& Phi, Omega omega, double t, double theta, double phi,
                      RootSearch search) {
  const int deg = Phi.first.degree();
  if (deg < 0 || deg > 2) return hopf_solve(Fn2Callable::from(Phi), omega, t, theta, phi, search);
  const double P = phi + omega.value * t;
  auto c = [&](int i) {
    if (Phi.first.kind == Fn1::Kind::constant) return i == 0 ? Phi.first.p[0] : 0.0;
    return i < static_cast<int>(Phi.first.p.size()) ? Phi.first.p[i] : 0.0;
  };
  // c2 u^2 + (c1 + t) u + (c0 + g - theta) = 0
  const double a = c(2), b = c(1) + t, cc = c(0) + Phi.second(P) - theta;
  std::vector<double> rs;
  if (a == 0) {
    if (b == 0) fail(ErrorCode::no_root, "hopf_solve: dPhi/du + t = 0 (blow-up time)");
    rs.push_back(-cc / b);
  } else {
    const double disc = b * b - 4 * a * cc;
    if (disc < 0) fail(ErrorCode::no_root, "hopf_solve: complex roots");
    const double q = -0.5 * (b + (b >= 0 ? std::sqrt(disc) : -std::sqrt(disc)));
    double r1 = q / a, r2 = q != 0 ? cc / q : r1;
    if (r1 > r2) std::swap(r1, r2);
    rs.push_back(r1);
    if (r2 != r1) rs.push_back(r2);
  }
  std::vector<double> in;
  for (double r : rs)
    if (r >= search.lo && r <= search.hi) in.push_back(r);
  const double u = pick_root(in, search, "hopf_solve");
  return {u, Phi.da(u, P) + t, in};
}

ScalarRoot hopf_solve(const Fn2Callable& Phi, Omega omega, double t, double theta, double phi,
                      RootSearch search) {
  const double P = phi + omega.value * t;
  auto g = guarded([&](double u) { return theta - u * t - Phi.f(u, P); });
  auto rs = roots::all_roots(g, search.lo, search.hi, search.cells);
  const double u = pick_root(rs, search, "hopf_solve");
  return {u, Phi.da(u, P) + t, rs};
}

FieldPtr make_hopf_field(const Fn2& Phi, Omega omega, RootSearch search) {
  const double w = omega.value;
  return make_analytic_field(
      "hopf", omega, Regime::FULL,
      [=](double t, double th, double ph) {
        return FieldValue{hopf_solve(Phi, omega, t, th, ph, search).value, -w};
      });
}

// ---------------------------------------------------------------------------

namespace {

double F_of(double theta, double k) { return elliptic::ellint_f(theta, k).value; }

}  // namespace

CoriolisReducedPoint coriolis_reduced_solve(const Fn2Callable& Phi, Omega omega, double t,
                                            double theta, double phi,
                                            CoriolisReducedOptions opt) {
  const double w = std::abs(omega.value), s = std::sin(theta);
  const double P = phi + omega.value * t;
  auto G = [&](double z) { return -z * t + F_of(theta, w / z) - Phi.f(z, P); };
  const double lo = w * s > 0 ? w * s * (1 + 1e-9) : 1e-12;
  if (!(opt.zeta_hi > lo)) fail(ErrorCode::no_root, "coriolis_reduced_solve: empty zeta bracket");
  auto rs = roots::all_roots(guarded(G), lo, opt.zeta_hi, opt.cells);
  if (rs.empty()) fail(ErrorCode::no_root, "coriolis_reduced_solve: no zeta root");
  const double z = rs.front();
  const double rad = opt.literal_zeta ? z - w * w * s * s : z * z - w * w * s * s;
  if (rad < 0) fail(ErrorCode::negative_radicand, "coriolis_reduced_solve: u^2 < 0");
  const double k = w / z;
  const double dFk = k > 0 ? elliptic::ellint_f_dk(theta, k) : 0.0;
  const double cond = -t - (w / (z * z)) * dFk - Phi.da(z, P);
  return {std::sqrt(rad), z, cond};
}

FieldPtr make_coriolis_reduced_field(const Fn2Callable& Phi, Omega omega,
                                     CoriolisReducedOptions opt) {
  const double w = omega.value;
  return make_analytic_field(
      opt.literal_zeta ? "coriolis_reduced_literal" : "coriolis_reduced", omega, Regime::CORIOLIS,
      [=](double t, double th, double ph) {
        return FieldValue{coriolis_reduced_solve(Phi, omega, t, th, ph, opt).u, -w};
      });
}

FieldValue stationary_coriolis_family(const Fn1& Phi, double t, double theta, double phi,
                                      Omega omega, int branch, bool no_sqrt) {
  const double w = omega.value, s = std::sin(theta);
  const double rad = Phi(phi + w * t) - w * w * s * s;
  const double sg = branch >= 0 ? 1 : -1;
  if (no_sqrt) return {sg * rad, -w};
  if (rad < 0) fail(ErrorCode::negative_radicand, "stationary_coriolis_family: u^2 < 0");
  return {sg * std::sqrt(rad), -w};
}

FieldPtr make_stationary_coriolis_field(const Fn1& Phi, Omega omega, int branch,
                                        bool no_sqrt) {
  return make_analytic_field(
      no_sqrt ? "stationary_coriolis_no_sqrt" : "stationary_coriolis", omega,
      Regime::CORIOLIS,
      [=](double t, double th, double ph) {
        return stationary_coriolis_family(Phi, t, th, ph, omega, branch, no_sqrt);
      },
      {{"branch", branch}});
}

ScalarRoot modulus_solve(const Fn2Callable& Phi, Omega omega, double t, double theta, double phi,
                         int cells) {
  const double s = std::sin(theta), P = phi + omega.value * t;
  const double eps = 1e-9;
  const double kmax = theta <= pi / 2 ? 1 / s - eps : 1 - eps;
  auto G = [&](double k) {
    if (k * s >= 1) fail(ErrorCode::domain, "modulus_solve: k sin(theta) >= 1");
    return -omega.value * t + k * F_of(theta, k) - Phi.f(k, P);
  };
  auto rs = roots::all_roots(guarded(G), 1e-12, kmax, cells);
  if (rs.empty()) fail(ErrorCode::no_root, "modulus_solve: no root in (0, 1/sin(theta))");
  const double k = rs.front();
  const double cond = F_of(theta, k) + k * elliptic::ellint_f_dk(theta, k) - Phi.da(k, P);
  return {k, cond, rs};
}

double modulus_pde_residual(const ScalarField& k, Omega omega, double t, double theta, double phi,
                            double h) {
  const double w[4] = {1, -8, 8, -1}, off[4] = {-2, -1, 1, 2};
  double kt = 0, kth = 0, kph = 0;
  for (int i = 0; i < 4; ++i) {
    kt += w[i] * k(t + off[i] * h, theta, phi);
    kth += w[i] * k(t, theta + off[i] * h, phi);
    kph += w[i] * k(t, theta, phi + off[i] * h);
  }
  kt /= 12 * h;
  kth /= 12 * h;
  kph /= 12 * h;
  const double k0 = k(t, theta, phi), s = std::sin(theta);
  const double om = omega.value;
  return kt + om * std::sqrt(std::max(0.0, 1 - k0 * k0 * s * s)) / k0 * kth - om * kph;
}

double pendulum_period(double theta_max, Omega omega, double rel_tol) {
  const double w = omega.value;
  if (w == 0 || !(theta_max > 0 && theta_max < pi / 2))
    fail(ErrorCode::domain, "pendulum_period: needs omega != 0 and theta_max in (0, pi/2)");
  // The libration crosses the pole, so the reduced 1D system is integrated
  // without the guard band.  Upward zero crossings of u mark full periods.
  auto rhs = [w](double, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = -w * w * std::sin(y[0]) * std::cos(y[0]);
  };
  ode::Options o;
  o.rel_tol = rel_tol;
  o.abs_tol = rel_tol * 1e-2;
  const double guess = pendulum_period_exact(theta_max, omega);
  std::vector<ode::Event> ev = {{[](double, const double* y) { return y[1]; }, +1, false}};
  auto sol = ode::dopri5(rhs, 0, {theta_max, 0}, 2.6 * guess, o, ev);
  std::vector<double> ts;
  for (const auto& e : sol.events)
    if (e.t > 1e-9 * guess) ts.push_back(e.t);
  if (ts.size() < 2) fail(ErrorCode::no_convergence, "pendulum_period: fewer than two crossings");
  return ts[1] - ts[0];
}

double pendulum_period_exact(double theta_max, Omega omega) {
  return 4 * elliptic::complete_k(std::sin(theta_max)) / std::abs(omega.value);
}

}  // namespace rotflow
