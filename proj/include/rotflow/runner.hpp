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

// Config-driven front end shared by the command-line tool and the C API.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rotflow/field.hpp"

namespace rotflow::runner {

enum ExitCode { ok = 0, config_error = 1, numerical_failure = 2, acceptance_failure = 3 };

struct RunOptions {
  std::string out_dir = ".";
  std::uint64_t seed = 20240601;
  int threads = 1;
  bool quiet = false;
};

struct RunResult {
  int exit_code = ok;
  std::string message;              // failing subcase or error text
  std::vector<std::string> outputs; // files written
};

// Field family from its config descriptor ({"kind": ...}); throws config.
FieldPtr family_field(const nlohmann::json& descriptor, Omega omega);

// Validates the config (unknown keys rejected) and runs it.  Never throws:
// failures are mapped to exit codes.  Progress goes to log unless quiet.
RunResult run(const nlohmann::json& config, const RunOptions& opt, std::ostream& log);
RunResult run_text(const std::string& config_text, const RunOptions& opt, std::ostream& log);
RunResult run_file(const std::string& path, const RunOptions& opt, std::ostream& log);

}  // namespace rotflow::runner
