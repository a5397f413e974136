// Copyright 2026 The rankone Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The rankone command-line front end as a library: job specification,
// execution and argument parsing.

#ifndef RANKONE_CLI_APP_HPP_
#define RANKONE_CLI_APP_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "rankone/cli/json_io.hpp"

namespace rankone::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kValidation = 2,
  kBoundaryAmbiguous = 3,
  kTruncationUnsound = 4,
};

struct JobSpec {
  std::string command;  // analyze, similar, times, circle, invert, matrix, oracle
  std::optional<Json> phi, r, s, t;
  int N = 64;
  int k = 1;
  std::optional<Complex> w;
  std::string side = "both";   // oracle: forward, adjoint, both
  std::string which = "all";   // matrix: U_r, K_r, K_toeplitz, all
  ToleranceConfig tol;
  std::string format = "json";  // json, text, csv
  std::string output;           // empty: stdout
  bool pretty = false;
};

struct JobResult {
  int exit_code = kOk;
  std::string report;   // document in the requested format
  std::string message;  // diagnostic for stderr
};

/// Runs one job; never throws.
JobResult run(const JobSpec& job);

/// Reads a function argument: inline JSON when it starts with '{', else a
/// file path relative to base.
Json load_json_arg(const std::string& arg, const std::filesystem::path& base);

/// Job from a batch manifest entry; keys mirror the command-line flags.
JobSpec job_from_json(const Json& j, const std::filesystem::path& base);

/// Parses "re" or "re,im".
Complex parse_complex(const std::string& text);

/// Entry point shared by the executable and the tests.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankone::cli

#endif  // RANKONE_CLI_APP_HPP_
