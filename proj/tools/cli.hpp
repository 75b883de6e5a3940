// Copyright 2026 The bvpcf Authors
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

#ifndef BVPCF_TOOLS_CLI_HPP_
#define BVPCF_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "bvpcf/bvpcf.h"

namespace bvpcf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPerfectPower = 2,
  kExitPrecisionCeiling = 3,
  kExitIo = 4,
  kExitInternal = 5,
};

struct CliConfig {
  bvpcf_command command = BVPCF_CMD_EXPAND;
  std::string k_lo;
  std::string k_hi;
  unsigned long m_lo = 0;
  unsigned long m_hi = 0;
  std::size_t terms = 10;
  unsigned long precision_cap_bits = 1ul << 20;
  unsigned threads = 0;
  bvpcf_format format = BVPCF_FORMAT_JSON;
  std::string out_path;  // empty: stdout
};

struct ParseOutcome {
  std::optional<CliConfig> config;
  int exit_code = kExitOk;
  std::string message;  // usage error or help text
};

ParseOutcome parse_args(int argc, const char* const* argv);

int exit_code_for(bvpcf_status status);

// Executes through the C API and writes the report to config.out_path or
// `out`. Diagnostics go to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bvpcf::cli

#endif  // BVPCF_TOOLS_CLI_HPP_
