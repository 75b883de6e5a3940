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

#ifndef BVPCF_REPORT_HPP_
#define BVPCF_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bvpcf/bvp_analyzer.hpp"

namespace bvpcf {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kCsvSchemaVersion = "1";

enum class Command { kExpand, kPredict, kVerify, kScan };
enum class Format { kJson, kCsv, kText };

const char* command_name(Command command) noexcept;

struct RunConfig {
  Command command = Command::kExpand;
  Integer k_lo = 2;
  Integer k_hi = 2;
  unsigned long m_lo = 3;
  unsigned long m_hi = 3;
  std::size_t terms = 10;
  unsigned long precision_cap_bits = 1ul << 20;
  unsigned threads = 0;
};

// Throws kInvalidArgument: empty range, terms == 0, cap < 64 bits.
void validate_config(const RunConfig& config);

struct PredictionRun {
  RadicandSpec spec;
  Expansion expansion;
  std::vector<PredictionOutcome> outcomes;  // n = 1 .. terms
};

struct Report {
  RunConfig config;
  std::string tool_version = kToolVersion;
  std::vector<Expansion> expansions;
  std::vector<PredictionRun> predictions;
  std::vector<TheoremReport> verifications;
  std::optional<ScanResult> scan;
};

// Non-scan commands propagate validation errors (kPerfectPower, ...); scan
// skips invalid specs.
Report run(const RunConfig& config);

std::string emit(const Report& report, Format format);

// Midpoint truncated to the number of decimals the width justifies, plus the
// width bound itself, e.g. {"-1.2696046480", "<=1e-10"}.
struct CertifiedDecimal {
  std::string value;
  std::string width;
};
CertifiedDecimal render_enclosure(const RationalInterval& interval);

// Truncated toward zero.
std::string to_decimal(const Rational& value, int places);
std::string to_fraction(const Rational& value);

}  // namespace bvpcf

#endif  // BVPCF_REPORT_HPP_
