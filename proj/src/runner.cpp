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

#include "rotflow/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "rotflow/acceptance.hpp"
#include "rotflow/blowup.hpp"
#include "rotflow/characteristics.hpp"
#include "rotflow/csv.hpp"
#include "rotflow/descriptor.hpp"
#include "rotflow/error.hpp"
#include "rotflow/hodograph.hpp"
#include "rotflow/invariants.hpp"
#include "rotflow/reduction.hpp"
#include "rotflow/transforms.hpp"

namespace rotflow::runner {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void config_fail(const std::string& msg) { fail(ErrorCode::config, msg); }

// Object reader that rejects keys it was not told about.
class Obj {
public:
  Obj(const json& j, std::string where, std::set<std::string> allowed)
    : j_(j), where_(std::move(where)) {
    if (!j.is_object()) config_fail(where_ + ": expected an object");
    for (const auto& [k, v] : j.items())
      if (!allowed.count(k)) config_fail(where_ + ": unknown key '" + k + "'");
  }

  bool has(const char* k) const { return j_.contains(k); }
  const json& at(const char* k) const {
    if (!has(k)) config_fail(where_ + ": missing '" + k + "'");
    return j_.at(k);
  }
  double num(const char* k) const {
    const auto& v = at(k);
    if (!v.is_number()) config_fail(where_ + ": '" + k + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) config_fail(where_ + ": '" + k + "' must be finite");
    return x;
  }
  double num(const char* k, double def) const { return has(k) ? num(k) : def; }
  int integer(const char* k, int def) const {
    if (!has(k)) return def;
    const auto& v = at(k);
    if (!v.is_number_integer()) config_fail(where_ + ": '" + k + "' must be an integer");
    return v.get<int>();
  }
  bool boolean(const char* k, bool def) const {
    if (!has(k)) return def;
    if (!at(k).is_boolean()) config_fail(where_ + ": '" + k + "' must be true or false");
    return at(k).get<bool>();
  }
  std::string str(const char* k) const {
    const auto& v = at(k);
    if (!v.is_string()) config_fail(where_ + ": '" + k + "' must be a string");
    return v.get<std::string>();
  }
  std::string str(const char* k, const std::string& def) const { return has(k) ? str(k) : def; }
  std::vector<double> nums(const char* k, std::size_t n) const {
    const auto& v = at(k);
    if (!v.is_array() || v.size() != n)
      config_fail(where_ + ": '" + k + "' must be an array of " + std::to_string(n) + " numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) config_fail(where_ + ": '" + k + "' must hold numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  const std::string& where() const { return where_; }

private:
  const json& j_;
  std::string where_;
};

int sign_of(int s, const std::string& where) {
  if (s != 1 && s != -1) config_fail(where + ": sign must be 1 or -1");
  return s;
}

Fn1 fn1(const Obj& o, const char* k, Fn1 def) {
  return o.has(k) ? Fn1::from_json(o.at(k)) : def;
}

State parse_state(const json& j, const std::string& where) {
  Obj o(j, where, {"t", "theta", "phi", "u", "v"});
  return {o.num("t", 0), o.num("theta"), o.num("phi", 0), o.num("u"), o.num("v")};
}

// ---- families -------------------------------------------------------------

struct Family {
  FieldPtr field;
  csv::DetFn det;
};

LinearPsi parse_psi(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) config_fail(where + ": psi must be [c, a, b]");
  for (const auto& e : j)
    if (!e.is_number()) config_fail(where + ": psi entries must be numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Family parse_family(const json& j, Omega w) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    config_fail("family: needs a string 'kind'");
  const std::string kind = j["kind"];
  const std::string where = "family '" + kind + "'";
  Family fam;
  auto angmom_det = [w](Fn1 F1, Fn1 F2) -> csv::DetFn {
    auto P = HodographProblem::angmom(w, F1, F2);
    return [P](double t, double th, double ph, double u, double v) {
      return P.det_m(t, th, ph, u, v);
    };
  };
  if (kind == "angmom_linear") {
    Obj o(j, where, {"kind", "a1", "b1", "a2", "b2"});
    AngmomSpec s;
    s.a1 = o.num("a1", 1);
    s.b1 = o.num("b1", 0);
    s.a2 = o.num("a2", 0);
    s.b2 = o.num("b2", 0);
    fam.field = make_angmom_field(s, w);
    fam.det = angmom_det(Fn1::poly({s.a1, s.b1}), Fn1::poly({s.a2, s.b2}));
  } else if (kind == "angmom_inverse") {
    Obj o(j, where, {"kind", "a", "b", "F"});
    AngmomSpec s;
    s.kind = AngmomSpec::Kind::inverse;
    s.a = o.num("a");
    s.b = o.num("b");
    s.F = fn1(o, "F", Fn1::sqrt_neg_log());
    fam.field = make_angmom_field(s, w);
  } else if (kind == "angmom_generic") {
    Obj o(j, where, {"kind", "F1", "F2", "xi_lo", "xi_hi", "xi_hint"});
    AngmomSpec s;
    s.kind = AngmomSpec::Kind::generic;
    s.F1 = fn1(o, "F1", Fn1::constant(1));
    s.F2 = fn1(o, "F2", Fn1::constant(0));
    s.xi_lo = o.num("xi_lo", -10);
    s.xi_hi = o.num("xi_hi", 10);
    s.xi_hint = o.num("xi_hint", 0);
    fam.field = make_angmom_field(s, w);
    fam.det = angmom_det(s.F1, s.F2);
  } else if (kind == "const") {
    Obj o(j, where, {"kind", "c1", "c2", "sigma"});
    const double c1 = o.num("c1", 0), c2 = o.num("c2", 0);
    const int sigma = sign_of(o.integer("sigma", 1), where);
    fam.field = make_const_field(c1, c2, sigma, w);
    auto P = HodographProblem::simple(w, sigma, {c1, 0, 0}, {c2, 0, 0});
    fam.det = [P](double t, double th, double ph, double u, double v) {
      return P.det_m(t, th, ph, u, v);
    };
  } else if (kind == "linear") {
    Obj o(j, where, {"kind", "a1", "b1", "a2", "b2", "c1", "branch"});
    LinearCoeffs k{o.num("a1", 0), o.num("b1", 0), o.num("a2", 0), o.num("b2", 0), o.num("c1", 0)};
    fam.field = make_linear_field(k, sign_of(o.integer("branch", 1), where), w);
    auto Pm = HodographProblem::simple(w, -1, {k.c1, k.a1, k.b1}, {0, k.a2, k.b2});
    auto Pp = HodographProblem::simple(w, 1, {k.c1, k.a1, k.b1}, {0, k.a2, k.b2});
    fam.det = [Pm, Pp](double t, double th, double ph, double u, double v) {
      return (u < 0 ? Pm : Pp).det_m(t, th, ph, u, v);
    };
  } else if (kind == "constant_L3") {
    Obj o(j, where, {"kind", "A", "branch"});
    fam.field = make_constant_L3_field(o.num("A"), w, sign_of(o.integer("branch", 1), where));
  } else if (kind == "stationary_coriolis") {
    Obj o(j, where, {"kind", "Phi", "branch", "no_sqrt"});
    fam.field = make_stationary_coriolis_field(Fn1::from_json(o.at("Phi")), w,
                                               sign_of(o.integer("branch", 1), where),
                                               o.boolean("no_sqrt", false));
  } else if (kind == "rapid_coriolis_stationary") {
    Obj o(j, where, {"kind", "Phi", "a"});
    fam.field = make_rapid_coriolis_stationary_field(Fn1::from_json(o.at("Phi")), o.num("a", 0), w);
  } else if (kind == "hopf") {
    Obj o(j, where, {"kind", "Phi", "lo", "hi"});
    RootSearch rs;
    rs.lo = o.num("lo", rs.lo);
    rs.hi = o.num("hi", rs.hi);
    fam.field = make_hopf_field(Fn2::from_json(o.at("Phi")), w, rs);
  } else if (kind == "coriolis_reduced") {
    Obj o(j, where, {"kind", "Phi", "zeta_hi", "literal_zeta"});
    CoriolisReducedOptions co;
    co.zeta_hi = o.num("zeta_hi", co.zeta_hi);
    co.literal_zeta = o.boolean("literal_zeta", false);
    fam.field = make_coriolis_reduced_field(Fn2Callable::from(Fn2::from_json(o.at("Phi"))), w, co);
  } else if (kind == "hodograph") {
    Obj o(j, where, {"kind", "preset", "regime", "sigma", "psi1", "psi2", "guess"});
    const std::string preset = o.str("preset", "simple");
    const int sigma = sign_of(o.integer("sigma", 1), where);
    const LinearPsi p1 = parse_psi(o.at("psi1"), where), p2 = parse_psi(o.at("psi2"), where);
    HodographProblem P;
    if (preset == "simple") {
      P = HodographProblem::simple(w, sigma, p1, p2);
    } else if (preset == "single_valued") {
      P = HodographProblem::single_valued(w, sigma, p1, p2);
    } else if (preset == "coriolis") {
      P = HodographProblem::coriolis(w, p1, p2);
    } else if (preset == "rapid") {
      P = HodographProblem::rapid(regime_from_name(o.str("regime", "RAPID")), w, p1, p2);
    } else {
      config_fail(where + ": unknown preset '" + preset + "'");
    }
    auto g = o.nums("guess", 2);
    const std::array<double, 2> guess{g[0], g[1]};
    fam.field = make_hodograph_field(
        P, [guess](double, double, double) { return guess; }, "hodograph_" + preset);
    fam.det = [P](double t, double th, double ph, double u, double v) {
      return P.det_m(t, th, ph, u, v);
    };
  } else {
    config_fail("unknown family kind '" + kind + "'");
  }
  return fam;
}

// ---- grids ----------------------------------------------------------------

csv::FieldGrid parse_field_grid(const json& j) {
  csv::FieldGrid g;
  if (j.is_null()) return g;
  Obj o(j, "grid", {"t", "n_theta", "n_phi", "theta_lo", "theta_hi", "phi_lo", "phi_hi"});
  g.t = o.num("t", 0);
  g.n_theta = o.integer("n_theta", g.n_theta);
  g.n_phi = o.integer("n_phi", g.n_phi);
  g.theta_lo = o.num("theta_lo", g.theta_lo);
  g.theta_hi = o.num("theta_hi", g.theta_hi);
  g.phi_lo = o.num("phi_lo", g.phi_lo);
  g.phi_hi = o.num("phi_hi", g.phi_hi);
  if (g.n_theta < 1 || g.n_phi < 1) config_fail("grid: sizes must be positive");
  return g;
}

Axis parse_axis(const Obj& o, const char* k, Axis def) {
  if (!o.has(k)) return def;
  auto v = o.nums(k, 3);
  if (v[2] < 1 || v[2] != std::floor(v[2])) config_fail("grid: node counts must be positive integers");
  return {v[0], v[1], static_cast<int>(v[2])};
}

// ---- helpers --------------------------------------------------------------

struct Context {
  const RunOptions& opt;
  std::ostream& log;
  csv::Provenance prov;
  RunResult result;

  std::string path(const std::string& name) const { return (fs::path(opt.out_dir) / name).string(); }
  void write(const csv::Table& t, const std::string& name) {
    const std::string p = path(name);
    t.write_file(p, prov);
    result.outputs.push_back(p);
    if (!opt.quiet) log << "wrote " << p << " (" << t.size() << " rows)\n";
  }
};

Omega parse_omega(const Obj& o) { return Omega{o.num("omega", 1)}; }

// ---- commands -------------------------------------------------------------

void cmd_integrate(const json& j, Context& cx) {
  Obj o(j, "integrate", {"command", "regime", "omega", "state", "random_states", "t_end", "rel_tol",
                         "abs_tol", "h_max", "output"});
  const Regime r = regime_from_name(o.str("regime", "FULL"));
  const Omega w = parse_omega(o);
  IntegrateOptions io;
  io.rel_tol = o.num("rel_tol", io.rel_tol);
  io.abs_tol = o.num("abs_tol", io.abs_tol);
  io.h_max = o.num("h_max", io.h_max);
  const double t_end = o.num("t_end", 10);
  const std::string out = o.str("output", "trajectory.csv");

  std::vector<State> starts;
  if (o.has("state")) starts.push_back(parse_state(o.at("state"), "integrate.state"));
  const int nrand = o.integer("random_states", 0);
  if (nrand < 0) config_fail("integrate: random_states must be >= 0");
  std::mt19937_64 rng(cx.opt.seed);
  std::uniform_real_distribution<double> U(0, 1);
  for (int i = 0; i < nrand; ++i)
    starts.push_back({0, 0.4 + (3.141592653589793 - 0.8) * U(rng), 6.283185307179586 * U(rng),
                      2 * U(rng) - 1, 2 * U(rng) - 1});
  if (starts.empty()) config_fail("integrate: give 'state' or 'random_states'");

  for (std::size_t i = 0; i < starts.size(); ++i) {
    auto tr = integrate(r, starts[i], w, t_end, io);
    std::string name = out;
    if (starts.size() > 1) {
      const auto dot = out.rfind('.');
      name = out.substr(0, dot) + "_" + std::to_string(i) + (dot == std::string::npos ? "" : out.substr(dot));
    }
    cx.write(csv::trajectory_table(tr), name);
    if (tr.status != TrajectoryStatus::completed) {
      cx.result.exit_code = numerical_failure;
      cx.result.message = "trajectory " + std::to_string(i) + ": " +
                          trajectory_status_name(tr.status) + " at t=" +
                          csv::format(tr.back().t);
    }
  }
}

void cmd_invariants(const json& j, Context& cx) {
  Obj o(j, "invariants", {"command", "regime", "omega", "states", "output"});
  const Regime r = regime_from_name(o.str("regime", "FULL"));
  const Omega w = parse_omega(o);
  const auto& arr = o.at("states");
  if (!arr.is_array() || arr.empty()) config_fail("invariants: 'states' must be a non-empty array");
  std::vector<State> states;
  for (std::size_t i = 0; i < arr.size(); ++i)
    states.push_back(parse_state(arr[i], "invariants.states[" + std::to_string(i) + "]"));
  std::vector<InvariantSet> sets;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states.size(); ++i) {
    try {
      sets.push_back(evaluate_invariants(r, states[i], w));
    } catch (const Error& e) {
      throw Error(e.code(), "state " + std::to_string(i) + ": " + e.what());
    }
    for (const auto& e : sets.back().entries)
      if (std::find(names.begin(), names.end(), e.name) == names.end()) names.push_back(e.name);
  }
  std::vector<std::string> cols{"t", "theta", "phi", "u", "v"};
  cols.insert(cols.end(), names.begin(), names.end());
  csv::Table t(cols);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    std::vector<double> row{s.t, s.theta, s.phi, s.u, s.v};
    for (const auto& n : names) row.push_back(sets[i].has(n) ? sets[i].get(n) : std::nan(""));
    t.add(row);
  }
  cx.write(t, o.str("output", "invariants.csv"));
}

void cmd_solve(const json& j, Context& cx) {
  Obj o(j, "solve", {"command", "omega", "family", "grid", "output"});
  const Omega w = parse_omega(o);
  const auto grid = parse_field_grid(o.has("grid") ? o.at("grid") : json());
  const auto& fj = o.at("family");
  const std::string out = o.str("output", "field.csv");
  if (fj.is_object() && fj.value("kind", "") == "modulus") {
    Obj m(fj, "family 'modulus'", {"kind", "Phi", "cells"});
    auto Phi = Fn2Callable::from(Fn2::from_json(m.at("Phi")));
    const int cells = m.integer("cells", 2000);
    cx.write(csv::scalar_table("k",
                               [&](double t, double th, double ph) {
                                 auto r = modulus_solve(Phi, w, t, th, ph, cells);
                                 return csv::ScalarSample{r.value, r.condition};
                               },
                               grid),
             out);
    return;
  }
  auto fam = parse_family(fj, w);
  cx.write(csv::field_table(*fam.field, grid, fam.det), out);
}

void cmd_blowup(const json& j, Context& cx) {
  Obj o(j, "blowup", {"command", "omega", "condition", "grid", "tol", "output"});
  const Omega w = parse_omega(o);
  const auto& cj = o.at("condition");
  if (!cj.is_object() || !cj.contains("kind") || !cj["kind"].is_string())
    config_fail("blowup.condition: needs a string 'kind'");
  const std::string kind = cj["kind"];
  Condition g;
  std::string name;
  if (kind == "hopf") {
    Obj c(cj, "condition 'hopf'", {"kind", "Phi", "lo", "hi"});
    const Fn2 Phi = Fn2::from_json(c.at("Phi"));
    RootSearch rs;
    rs.lo = c.num("lo", -1e12);
    rs.hi = c.num("hi", 1e12);
    g = [=](double t, double th, double ph) { return hopf_solve(Phi, w, t, th, ph, rs).condition; };
    name = "dPhi/du+t";
  } else if (kind == "modulus") {
    Obj c(cj, "condition 'modulus'", {"kind", "Phi", "cells"});
    const auto Phi = Fn2Callable::from(Fn2::from_json(c.at("Phi")));
    const int cells = c.integer("cells", 2000);
    g = [=](double t, double th, double ph) {
      return modulus_solve(Phi, w, t, th, ph, cells).condition;
    };
    name = "F+kF_k-Phi_k";
  } else if (kind == "coriolis_reduced") {
    Obj c(cj, "condition 'coriolis_reduced'", {"kind", "Phi", "zeta_hi"});
    const auto Phi = Fn2Callable::from(Fn2::from_json(c.at("Phi")));
    CoriolisReducedOptions co;
    co.zeta_hi = c.num("zeta_hi", co.zeta_hi);
    g = [=](double t, double th, double ph) {
      return coriolis_reduced_solve(Phi, w, t, th, ph, co).condition;
    };
    name = "dG/dzeta";
  } else if (kind == "field_det") {
    Obj c(cj, "condition 'field_det'", {"kind", "family"});
    auto fam = parse_family(c.at("family"), w);
    if (!fam.det) config_fail("condition 'field_det': family has no hodograph determinant");
    auto f = fam.field;
    auto det = fam.det;
    g = [f, det](double t, double th, double ph) {
      auto a = f->eval(t, th, ph);
      return det(t, th, ph, a.u, a.v);
    };
    name = "detM";
  } else {
    config_fail("unknown blow-up condition '" + kind + "'");
  }
  ScanGrid grid{Axis{0, 2, 41}, Axis{0.1, 3.0415926535897931, 60}, Axis{0, 0, 1}};
  if (o.has("grid")) {
    Obj gj(o.at("grid"), "blowup.grid", {"t", "theta", "phi"});
    grid.t = parse_axis(gj, "t", grid.t);
    grid.theta = parse_axis(gj, "theta", grid.theta);
    grid.phi = parse_axis(gj, "phi", grid.phi);
  }
  auto locus = scan(g, grid, o.num("tol", 1e-8), name, cx.opt.threads);
  if (!cx.opt.quiet)
    cx.log << "locus: " << locus.points.size() << " points, " << locus.segments.size()
           << " segments, " << locus.unsolved_nodes << "/" << locus.total_nodes
           << " unsolved nodes\n";
  cx.write(csv::locus_table(locus), o.str("output", "locus.csv"));
}

std::vector<std::array<double, 3>> parse_points(const Obj& o, std::uint64_t seed) {
  std::vector<std::array<double, 3>> pts;
  const auto& pj = o.at("points");
  if (pj.is_array()) {
    for (const auto& p : pj) {
      if (!p.is_array() || p.size() != 3) config_fail("residual: points must be [t, theta, phi]");
      for (const auto& e : p)
        if (!e.is_number()) config_fail("residual: points must hold numbers");
      pts.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    }
    return pts;
  }
  Obj r(pj, "residual.points", {"count", "t", "theta", "phi"});
  const int n = r.integer("count", 200);
  const auto t = r.has("t") ? r.nums("t", 2) : std::vector<double>{0, 1};
  const auto th = r.has("theta") ? r.nums("theta", 2) : std::vector<double>{0.2, 1.4};
  const auto ph = r.has("phi") ? r.nums("phi", 2) : std::vector<double>{0, 6.283185307179586};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0, 1);
  for (int i = 0; i < n; ++i)
    pts.push_back({t[0] + (t[1] - t[0]) * U(rng), th[0] + (th[1] - th[0]) * U(rng),
                   ph[0] + (ph[1] - ph[0]) * U(rng)});
  return pts;
}

void cmd_residual(const json& j, Context& cx) {
  Obj o(j, "residual", {"command", "omega", "regime", "family", "points", "h", "max_residual",
                        "output"});
  const Omega w = parse_omega(o);
  auto fam = parse_family(o.at("family"), w);
  const Regime r = o.has("regime") ? regime_from_name(o.str("regime")) : fam.field->regime;
  const double h = o.num("h", 1e-4);
  auto table = csv::residual_table(*fam.field, r, parse_points(o, cx.opt.seed), h);
  cx.write(table, o.str("output", "residual.csv"));
  double worst = 0;
  long valid = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double a = table.number(i, 3), b = table.number(i, 4);
    if (std::isnan(a)) continue;
    ++valid;
    worst = std::max({worst, std::abs(a), std::abs(b)});
  }
  if (!cx.opt.quiet)
    cx.log << "residual: max " << csv::format(worst) << " over " << valid << " valid points\n";
  if (o.has("max_residual") && !(worst <= o.num("max_residual"))) {
    cx.result.exit_code = numerical_failure;
    cx.result.message = "residual " + csv::format(worst) + " exceeds max_residual";
  }
}

void cmd_transform(const json& j, Context& cx) {
  Obj o(j, "transform", {"command", "omega", "family", "map", "grid", "output"});
  const Omega w = parse_omega(o);
  auto fam = parse_family(o.at("family"), w);
  const std::string m = o.str("map");
  FieldPtr out;
  if (m == "to_nonrotating") {
    out = map_field({FrameMap::Direction::to_nonrotating, w}, fam.field);
  } else if (m == "to_physical") {
    out = physical_map(PhysicalDirection::to_physical, fam.field);
  } else if (m == "phi_shift_to_nonrotating") {
    out = phi_independent_shift({FrameMap::Direction::to_nonrotating, w}, fam.field);
  } else {
    config_fail("transform: unknown map '" + m +
                "' (to_nonrotating, to_physical, phi_shift_to_nonrotating)");
  }
  const auto grid = parse_field_grid(o.has("grid") ? o.at("grid") : json());
  cx.write(csv::field_table(*out, grid), o.str("output", "transformed.csv"));
}

void cmd_verify(const json& j, Context& cx) {
  Obj o(j, "verify-all", {"command", "criteria", "output"});
  std::vector<int> ids;
  if (o.has("criteria")) {
    const auto& c = o.at("criteria");
    if (!c.is_array()) config_fail("verify-all: 'criteria' must be an array of ids");
    for (const auto& e : c) {
      if (!e.is_number_integer() || e.get<int>() < 1 || e.get<int>() > acceptance::criterion_count)
        config_fail("verify-all: criterion ids run from 1 to 10");
      ids.push_back(e.get<int>());
    }
  } else {
    for (int i = 1; i <= acceptance::criterion_count; ++i) ids.push_back(i);
  }
  acceptance::Options ao;
  ao.seed = cx.opt.seed;
  ao.threads = cx.opt.threads;
  std::vector<acceptance::CriterionResult> rs;
  std::string failed;
  for (int id : ids) {
    rs.push_back(acceptance::run_criterion(id, ao));
    if (!cx.opt.quiet) cx.log << acceptance::summary_line(rs.back()) << "\n";
    if (!rs.back().pass) failed += (failed.empty() ? "" : ",") + std::to_string(id);
  }
  auto rep = acceptance::report(rs, ao);
  rep["config_hash"] = cx.prov.config_hash;
  const std::string p = cx.path(o.str("output", "report.json"));
  std::ofstream os(p, std::ios::binary);
  if (!os) fail(ErrorCode::io, "cannot open " + p + " for writing");
  os << rep.dump(2) << "\n";
  if (!os) fail(ErrorCode::io, "write failed: " + p);
  cx.result.outputs.push_back(p);
  if (!failed.empty()) {
    cx.result.exit_code = acceptance_failure;
    cx.result.message = "criteria failed: " + failed;
  }
}

}  // namespace

FieldPtr family_field(const json& descriptor, Omega omega) {
  return parse_family(descriptor, omega).field;
}

RunResult run(const json& config, const RunOptions& opt, std::ostream& log) {
  Context cx{opt, log, {}, {}};
  try {
    if (!config.is_object() || !config.contains("command") || !config["command"].is_string())
      config_fail("config: needs a string 'command'");
    cx.prov.config_hash = csv::config_hash(config.dump());
    cx.prov.seed = opt.seed;
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (!fs::is_directory(opt.out_dir)) fail(ErrorCode::io, "output directory " + opt.out_dir + " is not usable");
    const std::string cmd = config["command"];
    if (cmd == "integrate") cmd_integrate(config, cx);
    else if (cmd == "invariants") cmd_invariants(config, cx);
    else if (cmd == "solve") cmd_solve(config, cx);
    else if (cmd == "blowup") cmd_blowup(config, cx);
    else if (cmd == "residual") cmd_residual(config, cx);
    else if (cmd == "transform") cmd_transform(config, cx);
    else if (cmd == "verify-all") cmd_verify(config, cx);
    else config_fail("unknown command '" + cmd + "'");
  } catch (const Error& e) {
    const bool cfg = e.code() == ErrorCode::config || e.code() == ErrorCode::io;
    cx.result.exit_code = cfg ? config_error : numerical_failure;
    cx.result.message = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    cx.result.exit_code = numerical_failure;
    cx.result.message = e.what();
  }
  if (!cx.result.message.empty() && !opt.quiet) log << cx.result.message << "\n";
  return cx.result;
}

RunResult run_text(const std::string& text, const RunOptions& opt, std::ostream& log) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    RunResult r;
    r.exit_code = config_error;
    r.message = std::string("ConfigError: invalid JSON: ") + e.what();
    if (!opt.quiet) log << r.message << "\n";
    return r;
  }
  return run(j, opt, log);
}

RunResult run_file(const std::string& path, const RunOptions& opt, std::ostream& log) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    RunResult r;
    r.exit_code = config_error;
    r.message = "IOError: cannot read config " + path;
    if (!opt.quiet) log << r.message << "\n";
    return r;
  }
  std::stringstream ss;
  ss << is.rdbuf();
  return run_text(ss.str(), opt, log);
}

}  // namespace rotflow::runner
