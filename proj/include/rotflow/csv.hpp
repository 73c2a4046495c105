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

#include <array>
#include <cstdint>
#include <istream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "rotflow/blowup.hpp"
#include "rotflow/characteristics.hpp"
#include "rotflow/field.hpp"

namespace rotflow::csv {

// FNV-1a 64 of the given text, as 16 lowercase hex digits.
std::string config_hash(const std::string& text);

// 17 significant digits, "nan" / "inf" / "-inf" for non-finite values.
std::string format(double x);

struct Provenance {
  std::string config_hash;
  std::uint64_t seed = 0;
};

class Table {
public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  void add(const std::vector<double>& row);  // throws Error(invalid_argument) on width mismatch
  void add_cells(std::vector<std::string> row);
  void write(std::ostream& os, const Provenance& p) const;
  void write_file(const std::string& path, const Provenance& p) const;  // throws io

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  double number(std::size_t row, std::size_t col) const;
  std::size_t column(const std::string& name) const;  // throws Error(invalid_argument)

private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

// t, theta, phi_unwrapped, u, v, then one column per invariant of the
// regime (tracked along the run), then aux when present.
Table trajectory_table(const Trajectory& traj);

struct FieldGrid {
  double t = 0;
  int n_theta = 128, n_phi = 128;
  double theta_lo = 0, theta_hi = 3.141592653589793;  // cell centres
  double phi_lo = 0, phi_hi = 6.283185307179586;      // left-closed nodes
  double theta_at(int j) const { return theta_lo + (theta_hi - theta_lo) * (j + 0.5) / n_theta; }
  double phi_at(int k) const { return phi_lo + (phi_hi - phi_lo) * k / n_phi; }
};

// theta, phi, u, v, detM, valid.  detM is nan without a callback; invalid
// points carry nan velocities and valid = 0.
using DetFn = std::function<double(double t, double theta, double phi, double u, double v)>;
Table field_table(const SolutionField& f, const FieldGrid& g, const DetFn& det = {});

// t, theta, phi, condition_value, condition_name.
Table locus_table(const BlowupLocus& locus);

// Scalar reduced field (u or k) on a (theta, phi) grid: theta, phi, <name>,
// condition, blowup.  blowup = 1 where the condition changes sign between
// this node and the next theta node.
struct ScalarSample {
  double value, condition;
};
using ScalarSampler = std::function<ScalarSample(double t, double theta, double phi)>;
Table scalar_table(const std::string& name, const ScalarSampler& f, const FieldGrid& g);

// t, theta, phi, r1, r2.
Table residual_table(const SolutionField& f, Regime regime,
                     const std::vector<std::array<double, 3>>& points, double h);

// Minimal reader for files written by Table::write (tests and round trips).
Table read(std::istream& is);

}  // namespace rotflow::csv
