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

#include "rotflow/rotflow.h"

#include <cmath>
#include <iostream>
#include <new>
#include <string>

#include "rotflow/characteristics.hpp"
#include "rotflow/elliptic.hpp"
#include "rotflow/error.hpp"
#include "rotflow/field.hpp"
#include "rotflow/invariants.hpp"
#include "rotflow/runner.hpp"
#include "rotflow/transforms.hpp"

struct rotflow_field {
  rotflow::FieldPtr f;
};

struct rotflow_invariants {
  rotflow::InvariantSet set;
};

struct rotflow_trajectory {
  rotflow::Trajectory tr;
};

namespace {

thread_local std::string last_error;

rotflow_status set_error(rotflow_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs body and maps exceptions to status codes.
template <class F>
rotflow_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return ROTFLOW_OK;
  } catch (const rotflow::Error& e) {
    return set_error(static_cast<rotflow_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ROTFLOW_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ROTFLOW_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(ROTFLOW_E_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* what) {
  if (!p) rotflow::fail(rotflow::ErrorCode::invalid_argument, std::string(what) + " is null");
}

rotflow::Regime regime(const char* name) {
  need(name, "regime");
  return rotflow::regime_from_name(name);
}

}  // namespace

extern "C" {

const char* rotflow_version(void) { return ROTFLOW_VERSION; }

const char* rotflow_status_name(rotflow_status s) {
  if (s == ROTFLOW_OK) return "OK";
  if (s == ROTFLOW_E_INTERNAL) return "InternalError";
  if (s >= ROTFLOW_E_DOMAIN && s <= ROTFLOW_E_IO)
    return rotflow::error_code_name(static_cast<rotflow::ErrorCode>(static_cast<int>(s)));
  return "Unknown";
}

const char* rotflow_last_error(void) { return last_error.c_str(); }

rotflow_status rotflow_force(const char* reg, double theta, double u, double v, double omega,
                             double* f1, double* f2) {
  return guard([&] {
    need(f1, "f1");
    need(f2, "f2");
    auto F = rotflow::force(regime(reg), theta, u, v, rotflow::Omega{omega});
    *f1 = F.f1;
    *f2 = F.f2;
  });
}

rotflow_status rotflow_ellint_f(double phi, double k, double* out) {
  return guard([&] {
    need(out, "out");
    *out = rotflow::elliptic::ellint_f(phi, k).value;
  });
}

rotflow_status rotflow_ellint_pi(double phi, double alpha2, double k, double* out) {
  return guard([&] {
    need(out, "out");
    *out = rotflow::elliptic::ellint_pi(phi, alpha2, k).value;
  });
}

rotflow_status rotflow_jacobi(double x, double k, double* sn, double* cn, double* dn) {
  return guard([&] {
    need(sn, "sn");
    need(cn, "cn");
    need(dn, "dn");
    auto J = rotflow::elliptic::jacobi_sn_cn_dn(x, k);
    *sn = J.sn;
    *cn = J.cn;
    *dn = J.dn;
  });
}

rotflow_status rotflow_invariants_eval(const char* reg, double t, double theta, double phi,
                                       double u, double v, double omega,
                                       rotflow_invariants** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    auto set = rotflow::evaluate_invariants(regime(reg), {t, theta, phi, u, v},
                                            rotflow::Omega{omega});
    *out = new rotflow_invariants{std::move(set)};
  });
}

size_t rotflow_invariants_count(const rotflow_invariants* s) {
  return s ? s->set.entries.size() : 0;
}

const char* rotflow_invariants_name(const rotflow_invariants* s, size_t i) {
  if (!s || i >= s->set.entries.size()) return nullptr;
  return s->set.entries[i].name.c_str();
}

double rotflow_invariants_value(const rotflow_invariants* s, size_t i) {
  if (!s || i >= s->set.entries.size()) return std::nan("");
  return s->set.entries[i].value;
}

rotflow_status rotflow_invariants_get(const rotflow_invariants* s, const char* name,
                                      double* value) {
  return guard([&] {
    need(s, "set");
    need(name, "name");
    need(value, "value");
    *value = s->set.get(name);
  });
}

void rotflow_invariants_destroy(rotflow_invariants* s) { delete s; }

rotflow_status rotflow_integrate(const char* reg, const double state[5], double omega,
                                 double t_end, double rel_tol, double abs_tol,
                                 rotflow_trajectory** out) {
  return guard([&] {
    need(out, "out");
    need(state, "state");
    *out = nullptr;
    rotflow::IntegrateOptions o;
    if (rel_tol > 0) o.rel_tol = rel_tol;
    if (abs_tol > 0) o.abs_tol = abs_tol;
    auto tr = rotflow::integrate(regime(reg), {state[0], state[1], state[2], state[3], state[4]},
                                 rotflow::Omega{omega}, t_end, o);
    *out = new rotflow_trajectory{std::move(tr)};
  });
}

size_t rotflow_trajectory_size(const rotflow_trajectory* tr) {
  return tr ? tr->tr.samples.size() : 0;
}

rotflow_status rotflow_trajectory_sample(const rotflow_trajectory* tr, size_t i,
                                         double sample[5]) {
  return guard([&] {
    need(tr, "trajectory");
    need(sample, "sample");
    if (i >= tr->tr.samples.size())
      rotflow::fail(rotflow::ErrorCode::invalid_argument, "sample index out of range");
    const auto& s = tr->tr.samples[i];
    sample[0] = s.t;
    sample[1] = s.theta;
    sample[2] = s.phi;
    sample[3] = s.u;
    sample[4] = s.v;
  });
}

rotflow_status rotflow_trajectory_status(const rotflow_trajectory* tr) {
  if (!tr) return set_error(ROTFLOW_E_INVALID_ARGUMENT, "trajectory is null");
  switch (tr->tr.status) {
    case rotflow::TrajectoryStatus::completed: return ROTFLOW_OK;
    case rotflow::TrajectoryStatus::boundary_hit: return ROTFLOW_E_BOUNDARY_HIT;
    case rotflow::TrajectoryStatus::step_underflow: return ROTFLOW_E_STEP_UNDERFLOW;
  }
  return ROTFLOW_E_INTERNAL;
}

void rotflow_trajectory_destroy(rotflow_trajectory* tr) { delete tr; }

rotflow_status rotflow_field_create(const char* family_json, double omega, rotflow_field** out) {
  return guard([&] {
    need(out, "out");
    need(family_json, "family_json");
    *out = nullptr;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(family_json);
    } catch (const nlohmann::json::parse_error& e) {
      rotflow::fail(rotflow::ErrorCode::config, std::string("invalid JSON: ") + e.what());
    }
    *out = new rotflow_field{rotflow::runner::family_field(j, rotflow::Omega{omega})};
  });
}

rotflow_status rotflow_field_eval(const rotflow_field* f, double t, double theta, double phi,
                                  double* u, double* v) {
  return guard([&] {
    need(f, "field");
    need(u, "u");
    need(v, "v");
    auto a = f->f->eval(t, theta, phi);
    *u = a.u;
    *v = a.v;
  });
}

rotflow_status rotflow_field_residual(const rotflow_field* f, const char* reg, double t,
                                      double theta, double phi, double h, double* r1,
                                      double* r2) {
  return guard([&] {
    need(f, "field");
    need(r1, "r1");
    need(r2, "r2");
    auto R = rotflow::pde_residual(*f->f, regime(reg), t, theta, phi, h > 0 ? h : 1e-4);
    *r1 = R.r1;
    *r2 = R.r2;
  });
}

rotflow_status rotflow_field_map(const rotflow_field* f, const char* map, double omega,
                                 rotflow_field** out) {
  return guard([&] {
    need(f, "field");
    need(map, "map");
    need(out, "out");
    *out = nullptr;
    const std::string m = map;
    const rotflow::Omega w{omega};
    rotflow::FieldPtr r;
    if (m == "to_rotating")
      r = rotflow::map_field({rotflow::FrameMap::Direction::to_rotating, w}, f->f);
    else if (m == "to_nonrotating")
      r = rotflow::map_field({rotflow::FrameMap::Direction::to_nonrotating, w}, f->f);
    else if (m == "to_physical")
      r = rotflow::physical_map(rotflow::PhysicalDirection::to_physical, f->f);
    else if (m == "to_coordinate")
      r = rotflow::physical_map(rotflow::PhysicalDirection::to_coordinate, f->f);
    else
      rotflow::fail(rotflow::ErrorCode::invalid_argument, "unknown map '" + m + "'");
    *out = new rotflow_field{std::move(r)};
  });
}

void rotflow_field_destroy(rotflow_field* f) { delete f; }

rotflow_status rotflow_run(const char* config_json, const char* out_dir, uint64_t seed,
                           int threads, int quiet, int* exit_code) {
  return guard([&] {
    need(config_json, "config_json");
    need(exit_code, "exit_code");
    rotflow::runner::RunOptions o;
    if (out_dir) o.out_dir = out_dir;
    o.seed = seed;
    o.threads = threads > 0 ? threads : 1;
    o.quiet = quiet != 0;
    auto r = rotflow::runner::run_text(config_json, o, std::cout);
    std::cout.flush();
    *exit_code = r.exit_code;
    if (r.exit_code != 0) last_error = r.message;
  });
}

}  // extern "C"
