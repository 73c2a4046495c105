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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace rotflow::acceptance {

struct Check {
  std::string name;
  double measured = 0;
  double threshold = 0;
  bool above = false;  // pass when measured > threshold instead of <=
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double wall_seconds = 0;
  double time_limit = 0;
  bool pass = false;
  std::string error;  // set when the run threw
};

struct Options {
  std::uint64_t seed = 20240601;
  int threads = 1;
};

inline constexpr int criterion_count = 10;

CriterionResult run_criterion(int id, const Options& opt);
std::vector<CriterionResult> run_all(const Options& opt);

// One line: "criterion <id> PASS|FAIL <title>: name=value<=thr ... (x.xx s / limit s)".
std::string summary_line(const CriterionResult& r);

nlohmann::json to_json(const CriterionResult& r);
nlohmann::json report(const std::vector<CriterionResult>& rs, const Options& opt);

}  // namespace rotflow::acceptance
