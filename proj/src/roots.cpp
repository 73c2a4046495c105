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

#include "rotflow/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rotflow/error.hpp"

namespace rotflow::roots {

double brent(const std::function<double(double)>& f, double a, double b, double xtol,
             int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) fail(ErrorCode::no_root, "brent: interval does not bracket a root");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    double tol = 2 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double s = fb / fa, p, q;
      if (a == c) {
        p = 2 * m * s;
        q = 1 - s;
      } else {
        double qq = fa / fc, r = fb / fc;
        p = s * (2 * m * qq * (qq - r) - (b - a) * (r - 1));
        q = (qq - 1) * (r - 1) * (s - 1);
      }
      if (p > 0) q = -q; else p = -p;
      if (2 * p < std::min(3 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

std::vector<double> all_roots(const std::function<double(double)>& f, double a, double b,
                              int n, double xtol) {
  std::vector<double> out;
  double h = (b - a) / n;
  double x0 = a, f0 = f(a);
  if (f0 == 0) out.push_back(a);
  for (int i = 1; i <= n; ++i) {
    double x1 = (i == n) ? b : a + i * h;
    double f1 = f(x1);
    if (std::isfinite(f0) && std::isfinite(f1)) {
      if (f1 == 0) {
        out.push_back(x1);
      } else if (f0 != 0 && (f0 > 0) != (f1 > 0)) {
        double r = brent(f, x0, x1, xtol);
        // Reject sign flips across a pole: the function must be small there.
        double fr = f(r);
        double scale = std::max(std::abs(f0), std::abs(f1));
        if (std::abs(fr) <= 1e-6 * std::max(1.0, scale)) out.push_back(r);
      }
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

std::array<double, 4> jacobian_fd(const Vec2Fn& f, const std::array<double, 2>& x) {
  std::array<double, 4> J{};
  for (int j = 0; j < 2; ++j) {
    double h = 1e-6 * std::max(1.0, std::abs(x[j]));
    auto xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    auto fp = f(xp), fm = f(xm);
    J[0 * 2 + j] = (fp[0] - fm[0]) / (2 * h);
    J[1 * 2 + j] = (fp[1] - fm[1]) / (2 * h);
  }
  return J;
}

Newton2Result newton2(const Vec2Fn& f, std::array<double, 2> x, double tol, int max_iter,
                      const std::function<std::array<double, 4>(const std::array<double, 2>&)>&
                          jac) {
  auto norm = [](const std::array<double, 2>& r) { return std::max(std::abs(r[0]), std::abs(r[1])); };
  auto safe_eval = [&](const std::array<double, 2>& p, std::array<double, 2>& r) {
    try {
      r = f(p);
      return std::isfinite(r[0]) && std::isfinite(r[1]);
    } catch (const Error&) {
      return false;
    }
  };
  std::array<double, 2> r;
  if (!safe_eval(x, r)) throw NoConvergenceError("newton2: initial guess outside domain",
                                                 std::numeric_limits<double>::infinity());
  double best = norm(r);
  for (int it = 0; it < max_iter; ++it) {
    auto J = jac ? jac(x) : jacobian_fd(f, x);
    double det = J[0] * J[3] - J[1] * J[2];
    if (best <= tol) return {x, r, det, it};
    if (det == 0 || !std::isfinite(det))
      throw NoConvergenceError("newton2: singular Jacobian during iteration", best);
    std::array<double, 2> dx = {-(J[3] * r[0] - J[1] * r[1]) / det,
                                -(-J[2] * r[0] + J[0] * r[1]) / det};
    double lam = 1;
    bool moved = false;
    for (int ls = 0; ls < 30; ++ls, lam *= 0.5) {
      std::array<double, 2> xn = {x[0] + lam * dx[0], x[1] + lam * dx[1]};
      std::array<double, 2> rn;
      if (!safe_eval(xn, rn)) continue;
      double nn = norm(rn);
      if (nn < best || nn <= tol) {
        x = xn;
        r = rn;
        best = nn;
        moved = true;
        break;
      }
    }
    if (!moved) throw NoConvergenceError("newton2: line search stalled", best);
  }
  if (best <= tol) {
    auto J = jac ? jac(x) : jacobian_fd(f, x);
    return {x, r, J[0] * J[3] - J[1] * J[2], max_iter};
  }
  throw NoConvergenceError("newton2: iteration limit", best);
}

}  // namespace rotflow::roots
