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

#include "rotflow/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <thread>
#include <tuple>

#include "rotflow/error.hpp"

namespace rotflow {

namespace {

struct EdgeKey {
  int axis, i, j, k;  // lower node and the axis the edge runs along
  bool operator<(const EdgeKey& o) const {
    return std::tie(axis, i, j, k) < std::tie(o.axis, o.i, o.j, o.k);
  }
};

std::optional<double> safe(const Condition& g, double t, double th, double ph) {
  try {
    double v = g(t, th, ph);
    if (std::isfinite(v)) return v;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

BlowupLocus scan(const Condition& g, const ScanGrid& grid, double tol, std::string name,
                 int threads) {
  const int nt = grid.t.n, nth = grid.theta.n, nph = grid.phi.n;
  const long total = static_cast<long>(nt) * nth * nph;
  std::vector<std::optional<double>> val(total);
  auto idx = [&](int i, int j, int k) { return (static_cast<long>(i) * nth + j) * nph + k; };

  auto fill = [&](long from, long to) {
    for (long n = from; n < to; ++n) {
      const int k = static_cast<int>(n % nph), j = static_cast<int>((n / nph) % nth),
                i = static_cast<int>(n / (static_cast<long>(nph) * nth));
      val[n] = safe(g, grid.t.at(i), grid.theta.at(j), grid.phi.at(k));
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    fill(0, total);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (total + threads - 1) / threads;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back(fill, std::min(total, w * chunk), std::min(total, (w + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  BlowupLocus out;
  out.condition = std::move(name);
  out.total_nodes = total;
  for (const auto& v : val)
    if (!v) ++out.unsolved_nodes;
  if (out.unsolved_nodes == total) fail(ErrorCode::empty_domain, "scan: no solvable grid node");

  // Bisection between two solvable points with opposite signs.
  auto refine = [&](const double* p0, const double* p1, double g0) -> std::optional<LocusPoint> {
    double s0 = 0, s1 = 1;
    double best_s = 0.5, best_g = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
      // The condition may be unsolvable exactly on the locus: nudge the
      // midpoint, then keep the last good point and let the tolerance decide.
      double sm = 0.5 * (s0 + s1);
      std::optional<double> gm;
      for (double nudge : {0.0, 0.01, -0.01}) {
        sm = 0.5 * (s0 + s1) + nudge * (s1 - s0);
        double pm[3];
        for (int d = 0; d < 3; ++d) pm[d] = p0[d] + sm * (p1[d] - p0[d]);
        gm = safe(g, pm[0], pm[1], pm[2]);
        if (gm) break;
      }
      if (!gm) break;
      best_s = sm;
      best_g = *gm;
      if (std::abs(*gm) < tol && (s1 - s0) < 1e-12) break;
      if ((*gm > 0) == (g0 > 0)) {
        s0 = sm;
        g0 = *gm;
      } else {
        s1 = sm;
      }
      if (s1 - s0 < 1e-16) break;
    }
    if (!(std::abs(best_g) < tol)) return std::nullopt;
    double pm[3];
    for (int d = 0; d < 3; ++d) pm[d] = p0[d] + best_s * (p1[d] - p0[d]);
    return LocusPoint{pm[0], pm[1], pm[2], best_g};
  };

  std::map<EdgeKey, int> edge_point;
  const int dims[3] = {nt, nth, nph};
  auto coords = [&](int i, int j, int k, double* p) {
    p[0] = grid.t.at(i);
    p[1] = grid.theta.at(j);
    p[2] = grid.phi.at(k);
  };
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nth; ++j)
      for (int k = 0; k < nph; ++k) {
        const auto& a = val[idx(i, j, k)];
        if (!a || *a == 0) continue;
        for (int ax = 0; ax < 3; ++ax) {
          const int ii = i + (ax == 0), jj = j + (ax == 1), kk = k + (ax == 2);
          if ((ax == 0 ? ii : ax == 1 ? jj : kk) >= dims[ax]) continue;
          double p0[3], p1[3];
          coords(i, j, k, p0);
          const auto& b = val[idx(ii, jj, kk)];
          if (b) {
            if ((*a > 0) == (*b > 0)) continue;
            coords(ii, jj, kk, p1);
          } else {
            // A single unsolvable node often sits on the locus itself:
            // bridge it when the next node along the axis flips sign.
            const int i2 = ii + (ax == 0), j2 = jj + (ax == 1), k2 = kk + (ax == 2);
            if ((ax == 0 ? i2 : ax == 1 ? j2 : k2) >= dims[ax]) continue;
            const auto& c = val[idx(i2, j2, k2)];
            if (!c || (*a > 0) == (*c > 0)) continue;
            coords(i2, j2, k2, p1);
          }
          if (auto pt = refine(p0, p1, *a)) {
            edge_point[{ax, i, j, k}] = static_cast<int>(out.points.size());
            out.points.push_back(*pt);
          }
        }
      }

  // Grid squares: for each pair of axes and lower corner, collect points on
  // the four bounding edges.
  for (int a1 = 0; a1 < 3; ++a1)
    for (int a2 = a1 + 1; a2 < 3; ++a2)
      for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nth; ++j)
          for (int k = 0; k < nph; ++k) {
            int c[3] = {i, j, k};
            if (c[a1] + 1 >= dims[a1] || c[a2] + 1 >= dims[a2]) continue;
            std::vector<int> pts;
            auto look = [&](int ax, int di, int dj, int dk) {
              auto it = edge_point.find({ax, i + di, j + dj, k + dk});
              if (it != edge_point.end()) pts.push_back(it->second);
            };
            int o1[3] = {a1 == 0, a1 == 1, a1 == 2}, o2[3] = {a2 == 0, a2 == 1, a2 == 2};
            look(a1, 0, 0, 0);
            look(a1, o2[0], o2[1], o2[2]);
            look(a2, 0, 0, 0);
            look(a2, o1[0], o1[1], o1[2]);
            if (pts.size() == 2) out.segments.emplace_back(pts[0], pts[1]);
          }
  return out;
}

GrowthReport derivative_growth_probe(const SolutionField& f, double t0, double theta, double phi,
                                     const std::vector<double>& distances, double rel_step) {
  GrowthReport rep;
  for (double d : distances) {
    const double t = t0 - d, h = d * rel_step;
    const double up = f.eval(t, theta + h, phi).u, um = f.eval(t, theta - h, phi).u;
    rep.samples.push_back({d, std::abs(up - um) / (2 * h)});
  }
  std::vector<GrowthSample> s = rep.samples;
  std::sort(s.begin(), s.end(), [](auto& a, auto& b) { return a.distance > b.distance; });
  rep.monotone = true;
  for (std::size_t i = 1; i < s.size(); ++i)
    rep.monotone = rep.monotone && s[i].derivative > s[i - 1].derivative;
  return rep;
}

}  // namespace rotflow
