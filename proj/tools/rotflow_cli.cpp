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

// rotflow command-line tool: runs a JSON config through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rotflow/rotflow.h"

int main(int argc, char** argv) {
  CLI::App app{"rotflow: rotating-sphere flow solutions, invariants and verification"};
  std::string config, out = ".";
  std::uint64_t seed = 20240601;
  int threads = 1;
  bool quiet = false;
  app.add_option("--config", config, "JSON run configuration")->required();
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "seed for random states")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for scans and suites")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--quiet", quiet, "suppress progress output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::ifstream is(config, std::ios::binary);
  if (!is) {
    std::fprintf(stderr, "rotflow: cannot read %s\n", config.c_str());
    return 1;
  }
  std::stringstream ss;
  ss << is.rdbuf();

  int exit_code = 0;
  const rotflow_status st =
      rotflow_run(ss.str().c_str(), out.c_str(), seed, threads, quiet ? 1 : 0, &exit_code);
  if (st != ROTFLOW_OK) {
    std::fprintf(stderr, "rotflow: %s: %s\n", rotflow_status_name(st), rotflow_last_error());
    return 2;
  }
  if (exit_code != 0 && quiet) std::fprintf(stderr, "rotflow: %s\n", rotflow_last_error());
  return exit_code;
}
