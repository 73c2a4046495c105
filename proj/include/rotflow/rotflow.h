/******************************************************************************/
/*                                                                            */
/*  This file is part of rotflow                                              */
/*                                                                            */
/*  Copyright 2026 rotflow developers                                         */
/*                                                                            */
/*  Licensed under the Apache License, Version 2.0 (the "License");           */
/*  you may not use this file except in compliance with the License.          */
/*  You may obtain a copy of the License at                                   */
/*                                                                            */
/*      http://www.apache.org/licenses/LICENSE-2.0                            */
/*                                                                            */
/*  Unless required by applicable law or agreed to in writing, software       */
/*  distributed under the License is distributed on an "AS IS" BASIS,         */
/*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  */
/*  See the License for the specific language governing permissions and       */
/*  limitations under the License.                                            */
/*                                                                            */
/******************************************************************************/

#ifndef ROTFLOW_H
#define ROTFLOW_H

/* C interface to the rotflow library.  Every call returns a status; on
   failure rotflow_last_error() holds a message for the calling thread.
   Handles are opaque and owned by the caller. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ROTFLOW_BUILDING)
#    define ROTFLOW_API __declspec(dllexport)
#  else
#    define ROTFLOW_API __declspec(dllimport)
#  endif
#else
#  define ROTFLOW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rotflow_status {
  ROTFLOW_OK = 0,
  ROTFLOW_E_DOMAIN = 1,
  ROTFLOW_E_NO_ROOT = 2,
  ROTFLOW_E_MULTIPLE_ROOTS = 3,
  ROTFLOW_E_NO_CONVERGENCE = 4,
  ROTFLOW_E_SINGULAR_JACOBIAN = 5,
  ROTFLOW_E_COMPLEX_ROOT = 6,
  ROTFLOW_E_NEGATIVE_RADICAND = 7,
  ROTFLOW_E_BOUNDARY_HIT = 8,
  ROTFLOW_E_STEP_UNDERFLOW = 9,
  ROTFLOW_E_QUADRATURE = 10,
  ROTFLOW_E_NOT_PHI_INDEPENDENT = 11,
  ROTFLOW_E_EMPTY_DOMAIN = 12,
  ROTFLOW_E_INVALID_ARGUMENT = 13,
  ROTFLOW_E_CONFIG = 14,
  ROTFLOW_E_IO = 15,
  ROTFLOW_E_INTERNAL = 100
} rotflow_status;

typedef struct rotflow_field rotflow_field;
typedef struct rotflow_invariants rotflow_invariants;
typedef struct rotflow_trajectory rotflow_trajectory;

ROTFLOW_API const char* rotflow_version(void);
ROTFLOW_API const char* rotflow_status_name(rotflow_status s);
ROTFLOW_API const char* rotflow_last_error(void);

/* Regime names: FULL, CORIOLIS, RAPID, RAPID_CORIOLIS, PHYS_FULL,
   PHYS_CORIOLIS, PHYS_RAPID. */
ROTFLOW_API rotflow_status rotflow_force(const char* regime, double theta, double u, double v,
                                         double omega, double* f1, double* f2);

/* Elliptic kernel. */
ROTFLOW_API rotflow_status rotflow_ellint_f(double phi, double k, double* out);
ROTFLOW_API rotflow_status rotflow_ellint_pi(double phi, double alpha2, double k, double* out);
ROTFLOW_API rotflow_status rotflow_jacobi(double x, double k, double* sn, double* cn, double* dn);

/* Invariants at a state. */
ROTFLOW_API rotflow_status rotflow_invariants_eval(const char* regime, double t, double theta,
                                                   double phi, double u, double v, double omega,
                                                   rotflow_invariants** out);
ROTFLOW_API size_t rotflow_invariants_count(const rotflow_invariants* set);
ROTFLOW_API const char* rotflow_invariants_name(const rotflow_invariants* set, size_t i);
ROTFLOW_API double rotflow_invariants_value(const rotflow_invariants* set, size_t i);
ROTFLOW_API rotflow_status rotflow_invariants_get(const rotflow_invariants* set, const char* name,
                                                  double* value);
ROTFLOW_API void rotflow_invariants_destroy(rotflow_invariants* set);

/* Characteristics.  A run that leaves the theta guard band still returns a
   trajectory; rotflow_trajectory_status reports BOUNDARY_HIT then. */
ROTFLOW_API rotflow_status rotflow_integrate(const char* regime, const double state[5],
                                             double omega, double t_end, double rel_tol,
                                             double abs_tol, rotflow_trajectory** out);
ROTFLOW_API size_t rotflow_trajectory_size(const rotflow_trajectory* tr);
/* sample = {t, theta, phi_unwrapped, u, v} */
ROTFLOW_API rotflow_status rotflow_trajectory_sample(const rotflow_trajectory* tr, size_t i,
                                                     double sample[5]);
ROTFLOW_API rotflow_status rotflow_trajectory_status(const rotflow_trajectory* tr);
ROTFLOW_API void rotflow_trajectory_destroy(rotflow_trajectory* tr);

/* Solution fields from a JSON family descriptor, e.g.
   {"kind": "angmom_linear", "a1": 1}. */
ROTFLOW_API rotflow_status rotflow_field_create(const char* family_json, double omega,
                                                rotflow_field** out);
ROTFLOW_API rotflow_status rotflow_field_eval(const rotflow_field* f, double t, double theta,
                                              double phi, double* u, double* v);
ROTFLOW_API rotflow_status rotflow_field_residual(const rotflow_field* f, const char* regime,
                                                  double t, double theta, double phi, double h,
                                                  double* r1, double* r2);
/* map: to_rotating, to_nonrotating, to_physical, to_coordinate. */
ROTFLOW_API rotflow_status rotflow_field_map(const rotflow_field* f, const char* map, double omega,
                                             rotflow_field** out);
ROTFLOW_API void rotflow_field_destroy(rotflow_field* f);

/* Runs a JSON config as the command-line tool does.  *exit_code receives
   0, 1 (config), 2 (numerical) or 3 (acceptance).  Progress is printed to
   stdout unless quiet. */
ROTFLOW_API rotflow_status rotflow_run(const char* config_json, const char* out_dir, uint64_t seed,
                                       int threads, int quiet, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
