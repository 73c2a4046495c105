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

#include <stdexcept>
#include <string>
#include <vector>

namespace rotflow {

enum class ErrorCode {
  domain = 1,
  no_root,
  multiple_roots,
  no_convergence,
  singular_jacobian,
  complex_root,
  negative_radicand,
  boundary_hit,
  step_underflow,
  quadrature_failure,
  not_phi_independent,
  empty_domain,
  invalid_argument,
  config,
  io,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }
private:
  ErrorCode code_;
};

// Thrown by root solvers that found more than one admissible root.
class MultipleRootsError : public Error {
public:
  MultipleRootsError(const std::string& msg, std::vector<double> roots)
    : Error(ErrorCode::multiple_roots, msg), roots_(std::move(roots)) {}
  const std::vector<double>& roots() const noexcept { return roots_; }
private:
  std::vector<double> roots_;
};

// Newton failure keeps the best residual seen.
class NoConvergenceError : public Error {
public:
  NoConvergenceError(const std::string& msg, double best)
    : Error(ErrorCode::no_convergence, msg), best_residual_(best) {}
  double best_residual() const noexcept { return best_residual_; }
private:
  double best_residual_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

inline void require(bool cond, ErrorCode c, const char* msg) {
  if (!cond) throw Error(c, msg);
}

}  // namespace rotflow
