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

#include "rotflow/ode.hpp"

#include <algorithm>
#include <cmath>

#include "rotflow/roots.hpp"

namespace rotflow::ode {

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI controller gains for a fifth order pair.
constexpr double beta = 0.04, alpha = 0.2 - beta * 0.75, safety = 0.9;
constexpr double fac_min = 0.2, fac_max = 10.0;

void hermite(double t0, const Vec& y0, const Vec& f0, double t1, const Vec& y1,
             const Vec& f1, double t, Vec& out) {
  double h = t1 - t0, s = (t - t0) / h;
  double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
  double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
  out.resize(y0.size());
  for (size_t i = 0; i < y0.size(); ++i)
    out[i] = h00 * y0[i] + h10 * h * f0[i] + h01 * y1[i] + h11 * h * f1[i];
}

double err_norm(const Vec& err, const Vec& y0, const Vec& y1, const Options& o) {
  double s = 0;
  for (size_t i = 0; i < err.size(); ++i) {
    double sc = o.abs_tol + o.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    double r = err[i] / sc;
    s += r * r;
  }
  return std::sqrt(s / err.size());
}

double initial_step(const Rhs& f, double t0, const Vec& y0, const Vec& f0, double dir,
                    const Options& o) {
  size_t n = y0.size();
  double d0 = 0, d1 = 0;
  for (size_t i = 0; i < n; ++i) {
    double sc = o.abs_tol + o.rel_tol * std::abs(y0[i]);
    d0 += (y0[i] / sc) * (y0[i] / sc);
    d1 += (f0[i] / sc) * (f0[i] / sc);
  }
  d0 = std::sqrt(d0 / n);
  d1 = std::sqrt(d1 / n);
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min(h0, o.h_max);
  Vec y1(n), f1(n);
  for (size_t i = 0; i < n; ++i) y1[i] = y0[i] + dir * h0 * f0[i];
  f(t0 + dir * h0, y1.data(), f1.data());
  double d2 = 0;
  for (size_t i = 0; i < n; ++i) {
    double sc = o.abs_tol + o.rel_tol * std::abs(y0[i]);
    d2 += ((f1[i] - f0[i]) / sc) * ((f1[i] - f0[i]) / sc);
  }
  d2 = std::sqrt(d2 / n) / h0;
  double h1 = std::max(d1, d2) <= 1e-15 ? std::max(1e-6, h0 * 1e-3)
                                        : std::pow(0.01 / std::max(d1, d2), 0.2);
  return std::min({100 * h0, h1, o.h_max});
}

}  // namespace

Solution dopri5(const Rhs& f, double t0, const Vec& y0, double t1, const Options& opt,
                const std::vector<Event>& events) {
  Solution sol;
  const size_t n = y0.size();
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  Vec y = y0, k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n), err(n);
  double t = t0;
  f(t, y.data(), k1.data());
  sol.t.push_back(t);
  sol.y.push_back(y);
  sol.dydt.push_back(k1);
  if (t0 == t1) return sol;

  double h = opt.h_init > 0 ? opt.h_init : initial_step(f, t0, y0, k1, dir, opt);
  double err_old = 1e-4;
  bool last_rejected = false;
  std::vector<double> gprev(events.size());
  for (size_t e = 0; e < events.size(); ++e) gprev[e] = events[e].g(t, y.data());

  for (long step = 0; step < opt.max_steps; ++step) {
    double remaining = std::abs(t1 - t);
    if (remaining <= 0) return sol;
    h = std::min({h, opt.h_max, remaining});
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      sol.status = Status::step_underflow;
      return sol;
    }
    double hs = dir * h;
    for (size_t i = 0; i < n; ++i) yt[i] = y[i] + hs * a21 * k1[i];
    f(t + c2 * hs, yt.data(), k2.data());
    for (size_t i = 0; i < n; ++i) yt[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * hs, yt.data(), k3.data());
    for (size_t i = 0; i < n; ++i)
      yt[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * hs, yt.data(), k4.data());
    for (size_t i = 0; i < n; ++i)
      yt[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * hs, yt.data(), k5.data());
    for (size_t i = 0; i < n; ++i)
      yt[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + hs, yt.data(), k6.data());
    for (size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + hs * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    f(t + hs, ynew.data(), k7.data());
    for (size_t i = 0; i < n; ++i)
      err[i] = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    double en = err_norm(err, y, ynew, opt);
    bool finite = std::isfinite(en);
    for (size_t i = 0; finite && i < n; ++i) finite = std::isfinite(ynew[i]);

    if (finite && en <= 1) {
      double tnew = (h == remaining) ? t1 : t + hs;
      // Event detection on the accepted step.
      bool stop = false;
      for (size_t e = 0; e < events.size() && !stop; ++e) {
        double gn = events[e].g(tnew, ynew.data());
        double gp = gprev[e];
        bool rising = gp < 0 && gn >= 0, falling = gp > 0 && gn <= 0;
        bool hit = (events[e].direction >= 0 && rising) || (events[e].direction <= 0 && falling);
        if (hit) {
          Vec yi;
          auto gfun = [&](double tau) {
            hermite(t, y, k1, tnew, ynew, k7, tau, yi);
            return events[e].g(tau, yi.data());
          };
          double te = roots::brent(gfun, t, tnew, 1e-15 * std::max(1.0, std::abs(tnew)));
          hermite(t, y, k1, tnew, ynew, k7, te, yi);
          sol.events.push_back({static_cast<int>(e), te, yi});
          if (events[e].terminal) {
            Vec fe(n);
            f(te, yi.data(), fe.data());
            sol.t.push_back(te);
            sol.y.push_back(yi);
            sol.dydt.push_back(fe);
            sol.status = Status::terminal_event;
            stop = true;
          }
        }
        gprev[e] = gn;
      }
      if (stop) return sol;
      t = tnew;
      y = ynew;
      k1 = k7;
      sol.t.push_back(t);
      sol.y.push_back(y);
      sol.dydt.push_back(k1);
      ++sol.accepted;
      if (t == t1) return sol;
      double fac = safety * std::pow(std::max(en, 1e-10), -alpha) * std::pow(err_old, beta);
      fac = std::clamp(fac, fac_min, last_rejected ? 1.0 : fac_max);
      h *= fac;
      err_old = std::max(en, 1e-4);
      last_rejected = false;
    } else {
      ++sol.rejected;
      double fac = finite ? std::max(fac_min, safety * std::pow(en, -alpha)) : 0.25;
      h *= std::min(fac, 1.0);
      last_rejected = true;
    }
  }
  sol.status = Status::max_steps;
  return sol;
}

Vec dense(const Solution& s, double t) {
  const auto& ts = s.t;
  if (ts.size() == 1) return s.y[0];
  bool fwd = ts.back() >= ts.front();
  size_t i;
  if (fwd) {
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    i = it == ts.begin() ? 0 : static_cast<size_t>(it - ts.begin()) - 1;
  } else {
    auto it = std::upper_bound(ts.begin(), ts.end(), t, std::greater<double>());
    i = it == ts.begin() ? 0 : static_cast<size_t>(it - ts.begin()) - 1;
  }
  i = std::min(i, ts.size() - 2);
  Vec out;
  hermite(ts[i], s.y[i], s.dydt[i], ts[i + 1], s.y[i + 1], s.dydt[i + 1], t, out);
  return out;
}

}  // namespace rotflow::ode
