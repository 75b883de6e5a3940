/* Copyright 2026 The bvpcf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libbvpcf.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Strings returned through char** out-parameters
 * are heap allocated and must be released with bvpcf_string_free. Functions
 * return BVPCF_OK or an error status; the message for the most recent error on
 * the calling thread is available from bvpcf_last_error().
 */

#ifndef BVPCF_BVPCF_H_
#define BVPCF_BVPCF_H_

#include <stddef.h>

#if defined(_WIN32)
#define BVPCF_API __declspec(dllexport)
#else
#define BVPCF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bvpcf_status {
  BVPCF_OK = 0,
  BVPCF_ERR_INVALID_ARGUMENT = 1,
  BVPCF_ERR_PERFECT_POWER = 2,
  BVPCF_ERR_INVALID_DEGREE = 3,
  BVPCF_ERR_PRECISION_CEILING = 4,
  BVPCF_ERR_DIVISION_BY_ZERO_INTERVAL = 5,
  BVPCF_ERR_INCONSISTENT_ENCLOSURES = 6,
  BVPCF_ERR_WRONG_DEGREE = 7,
  BVPCF_ERR_IO = 8,
  BVPCF_ERR_INTERNAL = 9
} bvpcf_status;

typedef enum bvpcf_command {
  BVPCF_CMD_EXPAND = 0,
  BVPCF_CMD_PREDICT = 1,
  BVPCF_CMD_VERIFY = 2,
  BVPCF_CMD_SCAN = 3
} bvpcf_command;

typedef enum bvpcf_format {
  BVPCF_FORMAT_JSON = 0,
  BVPCF_FORMAT_CSV = 1,
  BVPCF_FORMAT_TEXT = 2
} bvpcf_format;

typedef enum bvpcf_side { BVPCF_SIDE_ABOVE = 0, BVPCF_SIDE_BELOW = 1 } bvpcf_side;

typedef struct bvpcf_spec bvpcf_spec;
typedef struct bvpcf_expansion bvpcf_expansion;
typedef struct bvpcf_report bvpcf_report;

/* k bounds are base-10 strings so radicands are not limited to 64 bits. */
typedef struct bvpcf_run_config {
  bvpcf_command command;
  const char* k_lo;
  const char* k_hi;
  unsigned long m_lo;
  unsigned long m_hi;
  size_t terms;
  unsigned long precision_cap_bits;
  unsigned threads; /* 0: hardware concurrency */
} bvpcf_run_config;

BVPCF_API const char* bvpcf_version(void);
BVPCF_API const char* bvpcf_last_error(void);
BVPCF_API const char* bvpcf_status_name(bvpcf_status status);
BVPCF_API void bvpcf_string_free(char* s);

/* Fills defaults: expand, k = 2, m = 3, 10 terms, 2^20-bit cap. */
BVPCF_API void bvpcf_run_config_init(bvpcf_run_config* config);

BVPCF_API bvpcf_status bvpcf_spec_create(const char* k, unsigned long m,
                                         bvpcf_spec** out);
BVPCF_API void bvpcf_spec_destroy(bvpcf_spec* spec);

/* floor(alpha * 2^bits) as a decimal string. */
BVPCF_API bvpcf_status bvpcf_alpha_scaled_floor(const bvpcf_spec* spec,
                                                unsigned long bits, char** out);

/* b_0 .. b_terms. */
BVPCF_API bvpcf_status bvpcf_expand(const bvpcf_spec* spec, size_t terms,
                                    unsigned long precision_cap_bits,
                                    bvpcf_expansion** out);
/* Same contract, computed with the exact oracle only. */
BVPCF_API bvpcf_status bvpcf_expand_exact(const bvpcf_spec* spec, size_t terms,
                                          bvpcf_expansion** out);
BVPCF_API size_t bvpcf_expansion_length(const bvpcf_expansion* expansion);
BVPCF_API bvpcf_status bvpcf_expansion_convergent(const bvpcf_expansion* expansion,
                                                  size_t n, char** b, char** p,
                                                  char** q, bvpcf_side* side);
BVPCF_API void bvpcf_expansion_destroy(bvpcf_expansion* expansion);

/* 1 if floor(theta_n) == t for the expansion's convergent n, else 0. */
BVPCF_API bvpcf_status bvpcf_verify_quotient(const bvpcf_expansion* expansion,
                                             size_t n, const char* t, int* result);

BVPCF_API bvpcf_status bvpcf_run(const bvpcf_run_config* config,
                                 bvpcf_report** out);
BVPCF_API bvpcf_status bvpcf_report_render(const bvpcf_report* report,
                                           bvpcf_format format, char** out,
                                           size_t* length);
/* Number of violation records in a verify or scan report. */
BVPCF_API size_t bvpcf_report_violation_count(const bvpcf_report* report);
BVPCF_API void bvpcf_report_destroy(bvpcf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* BVPCF_BVPCF_H_ */
