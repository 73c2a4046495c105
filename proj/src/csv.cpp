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

#include "rotflow/csv.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "rotflow/error.hpp"
#include "rotflow/invariants.hpp"

namespace rotflow::csv {

std::string config_hash(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void Table::add(const std::vector<double>& row) {
  std::vector<std::string> cells;
  cells.reserve(row.size());
  for (double x : row) cells.push_back(format(x));
  add_cells(std::move(cells));
}

void Table::add_cells(std::vector<std::string> row) {
  if (row.size() != columns_.size())
    fail(ErrorCode::invalid_argument, "csv: row width does not match the header");
  rows_.push_back(std::move(row));
}

double Table::number(std::size_t row, std::size_t col) const {
  return std::strtod(rows_.at(row).at(col).c_str(), nullptr);
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == name) return i;
  fail(ErrorCode::invalid_argument, "csv: no column " + name);
}

void Table::write(std::ostream& os, const Provenance& p) const {
  os << "# rotflow config_hash=" << p.config_hash << " seed=" << p.seed << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  }
}

void Table::write_file(const std::string& path, const Provenance& p) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorCode::io, "cannot open " + path + " for writing");
  write(os, p);
  if (!os) fail(ErrorCode::io, "write failed: " + path);
}

Table trajectory_table(const Trajectory& traj) {
  std::vector<std::string> cols{"t", "theta", "phi_unwrapped", "u", "v"};
  std::vector<std::vector<double>> inv;
  std::vector<std::string> names;
  // Samples where the invariants are undefined (2H = 0, say) get nan; the
  // columns come from the first sample that evaluates.
  std::vector<std::optional<InvariantSet>> sets;
  if (!traj.samples.empty()) {
    InvariantTracker tracker(traj.regime, traj.omega);
    for (const auto& s : traj.samples) {
      try {
        sets.emplace_back(tracker.next(s));
        if (names.empty())
          for (const auto& e : sets.back()->entries) names.push_back(e.name);
      } catch (const Error&) {
        sets.emplace_back(std::nullopt);
      }
    }
  }
  for (const auto& set : sets) {
    std::vector<double> vals;
    for (const auto& n : names)
      vals.push_back(set && set->has(n) ? set->get(n) : std::nan(""));
    inv.push_back(std::move(vals));
  }
  for (const auto& n : names) cols.push_back(n);
  const bool aux = !traj.aux.empty();
  if (aux) cols.push_back("aux");
  Table t(cols);
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    std::vector<double> row{s.t, s.theta, s.phi, s.u, s.v};
    row.insert(row.end(), inv[i].begin(), inv[i].end());
    if (aux) row.push_back(traj.aux[i]);
    t.add(std::move(row));
  }
  return t;
}

Table field_table(const SolutionField& f, const FieldGrid& g, const DetFn& det) {
  Table tab({"theta", "phi", "u", "v", "detM", "valid"});
  const double nan = std::nan("");
  for (int j = 0; j < g.n_theta; ++j) {
    const double th = g.theta_at(j);
    for (int k = 0; k < g.n_phi; ++k) {
      const double ph = g.phi_at(k);
      try {
        auto a = f.eval(g.t, th, ph);
        double d = nan;
        if (det) {
          try {
            d = det(g.t, th, ph, a.u, a.v);
          } catch (const Error&) {
          }
        }
        tab.add({th, ph, a.u, a.v, d, 1});
      } catch (const Error&) {
        tab.add({th, ph, nan, nan, nan, 0});
      }
    }
  }
  return tab;
}

Table locus_table(const BlowupLocus& locus) {
  Table tab({"t", "theta", "phi", "condition_value", "condition_name"});
  for (const auto& p : locus.points)
    tab.add_cells({format(p.t), format(p.theta), format(p.phi), format(p.value), locus.condition});
  return tab;
}

Table scalar_table(const std::string& name, const ScalarSampler& f, const FieldGrid& g) {
  Table tab({"theta", "phi", name, "condition", "blowup"});
  const double nan = std::nan("");
  std::vector<ScalarSample> col(g.n_theta);
  for (int k = 0; k < g.n_phi; ++k) {
    const double ph = g.phi_at(k);
    for (int j = 0; j < g.n_theta; ++j) {
      try {
        col[j] = f(g.t, g.theta_at(j), ph);
      } catch (const Error&) {
        col[j] = {nan, nan};
      }
    }
    for (int j = 0; j < g.n_theta; ++j) {
      const double c = col[j].condition;
      const double next = j + 1 < g.n_theta ? col[j + 1].condition : nan;
      const bool flip = std::isfinite(c) && std::isfinite(next) && ((c < 0) != (next < 0));
      tab.add({g.theta_at(j), ph, col[j].value, c, flip ? 1.0 : 0.0});
    }
  }
  return tab;
}

Table residual_table(const SolutionField& f, Regime regime,
                     const std::vector<std::array<double, 3>>& points, double h) {
  Table tab({"t", "theta", "phi", "r1", "r2"});
  for (const auto& p : points) {
    double r1 = std::nan(""), r2 = std::nan("");
    try {
      auto r = pde_residual(f, regime, p[0], p[1], p[2], h);
      r1 = r.r1;
      r2 = r.r2;
    } catch (const Error&) {
    }
    tab.add({p[0], p[1], p[2], r1, r2});
  }
  return tab;
}

Table read(std::istream& is) {
  std::string line;
  std::vector<std::string> cols;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(c);
    break;
  }
  if (cols.empty()) fail(ErrorCode::io, "csv: missing header row");
  Table t(cols);
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) row.push_back(c);
    t.add_cells(std::move(row));
  }
  return t;
}

}  // namespace rotflow::csv
