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

#include "rotflow/error.hpp"

namespace rotflow {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::no_root: return "NoRoot";
    case ErrorCode::multiple_roots: return "MultipleRoots";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::singular_jacobian: return "SingularJacobian";
    case ErrorCode::complex_root: return "ComplexRoot";
    case ErrorCode::negative_radicand: return "NegativeRadicand";
    case ErrorCode::boundary_hit: return "BoundaryHit";
    case ErrorCode::step_underflow: return "StepUnderflow";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::not_phi_independent: return "NotPhiIndependent";
    case ErrorCode::empty_domain: return "EmptyDomain";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::io: return "IOError";
  }
  return "Unknown";
}

}  // namespace rotflow
