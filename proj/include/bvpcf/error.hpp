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

#ifndef BVPCF_ERROR_HPP_
#define BVPCF_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace bvpcf {

enum class Errc {
  kInvalidArgument = 1,
  kPerfectPower,
  kInvalidDegree,
  kPrecisionCeiling,
  kDivisionByIntervalContainingZero,
  kInconsistentEnclosures,
  kWrongDegree,
  kIo,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto bvpcf_status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bvpcf

#endif  // BVPCF_ERROR_HPP_
