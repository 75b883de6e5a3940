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

#include "bvpcf/bvpcf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bvpcf/error.hpp"
#include "bvpcf/report.hpp"

struct bvpcf_spec {
  bvpcf::RadicandSpec rep;
};

struct bvpcf_expansion {
  bvpcf::Expansion rep;
};

struct bvpcf_report {
  bvpcf::Report rep;
};

namespace {

thread_local std::string last_error;

bvpcf_status to_status(bvpcf::Errc code) {
  using bvpcf::Errc;
  switch (code) {
    case Errc::kInvalidArgument:
      return BVPCF_ERR_INVALID_ARGUMENT;
    case Errc::kPerfectPower:
      return BVPCF_ERR_PERFECT_POWER;
    case Errc::kInvalidDegree:
      return BVPCF_ERR_INVALID_DEGREE;
    case Errc::kPrecisionCeiling:
      return BVPCF_ERR_PRECISION_CEILING;
    case Errc::kDivisionByIntervalContainingZero:
      return BVPCF_ERR_DIVISION_BY_ZERO_INTERVAL;
    case Errc::kInconsistentEnclosures:
      return BVPCF_ERR_INCONSISTENT_ENCLOSURES;
    case Errc::kWrongDegree:
      return BVPCF_ERR_WRONG_DEGREE;
    case Errc::kIo:
      return BVPCF_ERR_IO;
  }
  return BVPCF_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes at the C boundary.
template <typename Fn>
bvpcf_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return BVPCF_OK;
  } catch (const bvpcf::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return BVPCF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return BVPCF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw bvpcf::Error(bvpcf::Errc::kInvalidArgument, what);
}

}  // namespace

extern "C" {

const char* bvpcf_version(void) { return bvpcf::kToolVersion; }

const char* bvpcf_last_error(void) { return last_error.c_str(); }

const char* bvpcf_status_name(bvpcf_status status) {
  switch (status) {
    case BVPCF_OK:
      return "ok";
    case BVPCF_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case BVPCF_ERR_PERFECT_POWER:
      return "perfect power";
    case BVPCF_ERR_INVALID_DEGREE:
      return "invalid degree";
    case BVPCF_ERR_PRECISION_CEILING:
      return "precision ceiling";
    case BVPCF_ERR_DIVISION_BY_ZERO_INTERVAL:
      return "division by interval containing zero";
    case BVPCF_ERR_INCONSISTENT_ENCLOSURES:
      return "inconsistent enclosures";
    case BVPCF_ERR_WRONG_DEGREE:
      return "wrong degree";
    case BVPCF_ERR_IO:
      return "io error";
    case BVPCF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void bvpcf_string_free(char* s) { std::free(s); }

void bvpcf_run_config_init(bvpcf_run_config* config) {
  if (config == nullptr) return;
  config->command = BVPCF_CMD_EXPAND;
  config->k_lo = "2";
  config->k_hi = "2";
  config->m_lo = 3;
  config->m_hi = 3;
  config->terms = 10;
  config->precision_cap_bits = 1ul << 20;
  config->threads = 0;
}

bvpcf_status bvpcf_spec_create(const char* k, unsigned long m, bvpcf_spec** out) {
  return guarded([&] {
    require(k != nullptr && out != nullptr, "null argument");
    *out = new bvpcf_spec{bvpcf::RadicandSpec::validate(bvpcf::parse_integer(k), m)};
  });
}

void bvpcf_spec_destroy(bvpcf_spec* spec) { delete spec; }

bvpcf_status bvpcf_alpha_scaled_floor(const bvpcf_spec* spec, unsigned long bits,
                                      char** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = dup_string(bvpcf::alpha_floor_scaled(spec->rep, bits, 2).scaled_floor.get_str());
  });
}

bvpcf_status bvpcf_expand(const bvpcf_spec* spec, size_t terms,
                          unsigned long precision_cap_bits, bvpcf_expansion** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    require(precision_cap_bits >= 64, "precision cap must be >= 64 bits");
    *out = new bvpcf_expansion{
        bvpcf::expand(spec->rep, terms, bvpcf::PrecisionPolicy{64, precision_cap_bits})};
  });
}

bvpcf_status bvpcf_expand_exact(const bvpcf_spec* spec, size_t terms,
                                bvpcf_expansion** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    *out = new bvpcf_expansion{bvpcf::expand_exact_oracle(spec->rep, terms)};
  });
}

size_t bvpcf_expansion_length(const bvpcf_expansion* expansion) {
  return expansion == nullptr ? 0 : expansion->rep.size();
}

bvpcf_status bvpcf_expansion_convergent(const bvpcf_expansion* expansion, size_t n,
                                        char** b, char** p, char** q,
                                        bvpcf_side* side) {
  return guarded([&] {
    require(expansion != nullptr, "null expansion");
    require(n < expansion->rep.size(), "index out of range");
    const bvpcf::Convergent& c = expansion->rep.at(n);
    if (b != nullptr) *b = dup_string(c.b.get_str());
    if (p != nullptr) *p = dup_string(c.p.get_str());
    if (q != nullptr) *q = dup_string(c.q.get_str());
    if (side != nullptr) {
      *side = c.side == bvpcf::Side::kAbove ? BVPCF_SIDE_ABOVE : BVPCF_SIDE_BELOW;
    }
  });
}

void bvpcf_expansion_destroy(bvpcf_expansion* expansion) { delete expansion; }

bvpcf_status bvpcf_verify_quotient(const bvpcf_expansion* expansion, size_t n,
                                   const char* t, int* result) {
  return guarded([&] {
    require(expansion != nullptr && t != nullptr && result != nullptr,
            "null argument");
    require(n < expansion->rep.size(), "index out of range");
    *result = bvpcf::verify_quotient(expansion->rep.spec(), expansion->rep.at(n),
                                     expansion->rep.previous(n),
                                     bvpcf::parse_integer(t))
                  ? 1
                  : 0;
  });
}

bvpcf_status bvpcf_run(const bvpcf_run_config* config, bvpcf_report** out) {
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    require(config->k_lo != nullptr && config->k_hi != nullptr, "null k bound");
    require(config->command >= BVPCF_CMD_EXPAND && config->command <= BVPCF_CMD_SCAN,
            "unknown command");
    bvpcf::RunConfig rc;
    rc.command = static_cast<bvpcf::Command>(config->command);
    rc.k_lo = bvpcf::parse_integer(config->k_lo);
    rc.k_hi = bvpcf::parse_integer(config->k_hi);
    rc.m_lo = config->m_lo;
    rc.m_hi = config->m_hi;
    rc.terms = config->terms;
    rc.precision_cap_bits = config->precision_cap_bits;
    rc.threads = config->threads;
    *out = new bvpcf_report{bvpcf::run(rc)};
  });
}

bvpcf_status bvpcf_report_render(const bvpcf_report* report, bvpcf_format format,
                                 char** out, size_t* length) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    require(format >= BVPCF_FORMAT_JSON && format <= BVPCF_FORMAT_TEXT,
            "unknown format");
    const std::string text =
        bvpcf::emit(report->rep, static_cast<bvpcf::Format>(format));
    *out = dup_string(text);
    if (length != nullptr) *length = text.size();
  });
}

size_t bvpcf_report_violation_count(const bvpcf_report* report) {
  if (report == nullptr) return 0;
  size_t count = 0;
  for (const auto& v : report->rep.verifications) count += v.violations.size();
  if (report->rep.scan) count += report->rep.scan->violations.size();
  return count;
}

void bvpcf_report_destroy(bvpcf_report* report) { delete report; }

}  // extern "C"
