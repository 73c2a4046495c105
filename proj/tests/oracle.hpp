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

// Reference computations used only by the tests.  Nothing here calls into
// the library, so the checks stay independent of the code under test.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// Double-exponential (tanh-sinh) quadrature on a finite interval.  Robust to
// integrable endpoint singularities, which is what the elliptic checks need.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-15) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double hp = std::numbers::pi / 2;
  double step = 0.5;
  auto level_sum = [&](double st, bool odd_only) {
    double s = 0;
    for (int i = odd_only ? 1 : 0;; i += odd_only ? 2 : 1) {
      double t = i * st;
      double u = hp * std::sinh(t);
      double ch = std::cosh(u);
      double w = hp * std::cosh(t) / (ch * ch);
      double dc = 2 / (std::exp(2 * u) + 1);  // 1 - tanh(u)
      if (w < 1e-300 || h * dc == 0) break;
      double contrib = 0;
      if (i == 0) {
        contrib = w * f(c);
      } else {
        double xr = b - h * dc, xl = a + h * dc;
        if (xr > a && xr < b) contrib += w * f(xr);
        if (xl > a && xl < b) contrib += w * f(xl);
      }
      s += contrib;
      if (t > 6.5) break;
    }
    return s;
  };
  double sum = level_sum(step, false);
  double prev = sum * step * h;
  for (int lev = 0; lev < 12; ++lev) {
    step /= 2;
    sum += level_sum(step, true);
    double cur = sum * step * h;
    if (lev > 2 && std::abs(cur - prev) <= tol * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

inline double ell_f(double phi, double k) {
  return tanh_sinh([k](double t) {
    double s = std::sin(t);
    return 1 / std::sqrt(1 - k * k * s * s);
  }, 0, phi);
}

inline double ell_pi(double phi, double n, double k) {
  return tanh_sinh([n, k](double t) {
    double s = std::sin(t);
    return 1 / ((1 - n * s * s) * std::sqrt(1 - k * k * s * s));
  }, 0, phi);
}

// R_F from its defining integral, with t = (s/(1-s))^2 mapping [0,1) onto
// the half line.
inline double carlson_rf(double x, double y, double z) {
  return tanh_sinh([=](double s) {
    // Integrand rewritten in q = 1 - s so nothing overflows near s = 1.
    double q = 1 - s;
    return s / (std::hypot(s, std::sqrt(x) * q) * std::hypot(s, std::sqrt(y) * q) *
                 std::hypot(s, std::sqrt(z) * q));
  }, 0, 1);
}

inline double carlson_rj(double x, double y, double z, double p) {
  return tanh_sinh([=](double s) {
    double q = 1 - s;
    double hp = std::hypot(s, std::sqrt(p) * q);
    return 3 * s * q * q /
           (hp * hp * std::hypot(s, std::sqrt(x) * q) * std::hypot(s, std::sqrt(y) * q) *
            std::hypot(s, std::sqrt(z) * q));
  }, 0, 1);
}

// Fourth-order central difference.
inline double d1(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

}  // namespace oracle
