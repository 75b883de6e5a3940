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

// Bombieri-van der Poorten quantities for a convergent p_n/q_n of k^(1/m):
//
//   d_n = |p_n^m - k q_n^m|
//   H_n = m p_n^(m-1) / (d_n q_n)                 leading term
//   A_n = H_n - q_{n-1}/q_n                       shifted leading term
//   W_n = (q_n^(m-2)/d_n) (sum_j x^j a^(m-1-j) - m x^(m-1))
//   R_n = theta_n - H_n = W_n - q_{n-1}/q_n       remainder
//   V_n = (q_n/d_n)(2x^2 - x a - a^2) = -W_n      cubic correction (m = 3)
//
// with x = p_n/q_n and a = alpha. Everything that does not involve alpha is an
// exact integer or rational; everything that does is a RationalInterval.

#ifndef BVPCF_BVP_ANALYZER_HPP_
#define BVPCF_BVP_ANALYZER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bvpcf/cf_engine.hpp"
#include "bvpcf/exact_arith.hpp"

namespace bvpcf {

Integer algebraic_distance(const RadicandSpec& spec, const Convergent& conv);
Rational leading_term(const RadicandSpec& spec, const Convergent& conv);
// m p^(m-1) and d q before reduction, e.g. 196830 and 15698 for 50^(1/10), n = 1.
std::pair<Integer, Integer> leading_term_unreduced(const RadicandSpec& spec,
                                                   const Convergent& conv);
Rational shifted_leading_term(const RadicandSpec& spec, const Convergent& conv,
                              const Convergent& prev);

namespace detail {
// sum_{j<m} x^j a^(m-1-j) - m x^(m-1) over a in `alpha`.
RationalInterval correction_sum(unsigned long m, const Rational& x,
                                const RationalInterval& alpha);
}  // namespace detail

// W_n.
RationalInterval general_correction(const RadicandSpec& spec,
                                    const Convergent& conv,
                                    const AlphaEnclosure& alpha);

// R_n through W_n - q_{n-1}/q_n.
RationalInterval remainder_from_correction(const RadicandSpec& spec,
                                           const Convergent& conv,
                                           const Convergent& prev,
                                           const AlphaEnclosure& alpha);
// R_n through theta_n - H_n; nullopt when theta_n is not yet separable.
std::optional<RationalInterval> remainder_from_theta(const RadicandSpec& spec,
                                                     const Convergent& conv,
                                                     const Convergent& prev,
                                                     const AlphaEnclosure& alpha);
// Intersection of both routes. Throws kInconsistentEnclosures if they are
// disjoint.
std::optional<RationalInterval> remainder(const RadicandSpec& spec,
                                          const Convergent& conv,
                                          const Convergent& prev,
                                          const AlphaEnclosure& alpha);

// 1 / (q^2 |x - alpha|) evaluated directly, and through q^(m-2)/d * sum.
std::optional<RationalInterval> inverse_gap_direct(const Convergent& conv,
                                                   const AlphaEnclosure& alpha);
RationalInterval inverse_gap_power_sum(const RadicandSpec& spec,
                                       const Convergent& conv,
                                       const AlphaEnclosure& alpha);

// V_n as (2x + a) / (q^2 (x^2 + x a + a^2)) with the sign of x - alpha
// attached exactly. Both cubic functions throw kWrongDegree for m != 3.
RationalInterval cubic_correction_closed_form(const RadicandSpec& spec,
                                              const Convergent& conv,
                                              const AlphaEnclosure& alpha);
// V_n as (q/d)(2x^2 - x a - a^2).
RationalInterval cubic_correction_defining_form(const RadicandSpec& spec,
                                                const Convergent& conv,
                                                const AlphaEnclosure& alpha);
// Intersection of the two forms; kInconsistentEnclosures if disjoint.
RationalInterval cubic_correction(const RadicandSpec& spec,
                                  const Convergent& conv,
                                  const AlphaEnclosure& alpha);

struct BvpTerms {
  long n = 0;
  Integer d;
  Rational H;
  Rational A;
  RationalInterval theta;
  RationalInterval R;
  RationalInterval W;
  std::optional<RationalInterval> V;  // m = 3 only
  Side side = Side::kAbove;
  unsigned long precision_bits = 0;
};

std::optional<BvpTerms> try_bvp_terms(const RadicandSpec& spec,
                                      const Convergent& conv,
                                      const Convergent& prev,
                                      const AlphaEnclosure& alpha);

struct PredictionOutcome {
  long n = 0;
  Integer floor_H;
  Integer candidate;             // floor(A_n)
  std::optional<int> epsilon;    // in {0, 1} when the floor formula holds
  Integer predicted;             // candidate + epsilon, or candidate if unresolved
  Integer actual;                // b_{n+1}
  Integer offset;                // actual - candidate
  bool formula_held = false;
  bool window_held = false;      // H - 2 < actual <= H
  bool fractional_part_nonzero = false;  // {A_n} != 0
};

// epsilon is resolved by at most two verify_quotient calls (candidate and
// candidate + 1). Failures are reported, not thrown.
PredictionOutcome predict_next(const RadicandSpec& spec, const Convergent& conv,
                               const Convergent& prev);

enum class Quantity { kRemainderBound, kWindowAbove, kWindowBelow, kEpsilonRange };

const char* quantity_name(Quantity quantity) noexcept;

struct ViolationRecord {
  Integer k;
  unsigned long m = 0;
  long n = 0;
  Quantity quantity = Quantity::kRemainderBound;
  std::variant<RationalInterval, Integer> observed;
  std::string claimed;
  // Regeneration data; b is b_{n+1}.
  Integer p;
  Integer q;
  Integer b;
  Integer d;
  Integer p_prev;
  Integer q_prev;
};

// Recomputes the violation from the stored data alone. True iff it reproduces.
bool recheck_violation(const ViolationRecord& record,
                       const PrecisionPolicy& policy = {});

// Claims made for convergents below alpha: H <= b_{n+1} < H + 2 and
// b_{n+1} = floor(A_n) + eps with eps in {-1, 0}. Measured, never assumed.
struct BelowSideClaims {
  bool lower_bound = false;
  bool upper_bound = false;
  bool epsilon_range = false;
};

struct IndexCheck {
  long n = 0;
  Convergent conv;
  Integer next_quotient;
  BvpTerms terms;
  PredictionOutcome prediction;
  bool remainder_below_one = false;   // certified |R_n| < 1
  bool above_window_held = false;     // H - 2 < b_{n+1} <= H
  bool general_window_held = false;   // b_{n+1} <= H and b_{n+1} + 2 > H
  std::optional<BelowSideClaims> below_claims;  // m = 3, below side
  std::optional<bool> v_sign_matches;           // m = 3
};

struct SkippedIndex {
  long n = 0;
  std::string reason;
};

// Least index n0 such that the property holds at every checked index in
// [n0, N]; nullopt if it fails at the last checked index or nothing was checked.
struct Thresholds {
  std::optional<long> remainder;
  std::optional<long> window;
};

struct TheoremReport {
  RadicandSpec spec;
  Expansion expansion;
  std::vector<IndexCheck> checks;
  std::vector<SkippedIndex> skipped;
  std::vector<ViolationRecord> violations;
  Thresholds thresholds;
  unsigned long precision_bits = 0;
};

// Checks every n <= max_index with q_n >= 2. Each R_n enclosure is refined
// until it sits strictly inside (-1, 1) or strictly outside [-1, 1] and is no
// wider than 2^-32. Throws kPrecisionCeiling.
TheoremReport verify_theorems(const RadicandSpec& spec, std::size_t max_index,
                              const PrecisionPolicy& policy = {});

struct ScanRequest {
  Integer k_lo;
  Integer k_hi;
  unsigned long m_lo = 3;
  unsigned long m_hi = 3;
  std::size_t max_index = 1;
  PrecisionPolicy policy;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanCell {
  Integer k;
  unsigned long m = 0;
  bool valid = false;
  std::string error;  // validation or precision failure
  Thresholds thresholds;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  unsigned long precision_bits = 0;
};

struct ScanResult {
  std::vector<ScanCell> cells;  // ordered by (m, k)
  std::vector<ViolationRecord> violations;  // ordered by (m, k, n, quantity)
  std::size_t skipped = 0;
  std::size_t failed = 0;
};

// Empty ranges give an empty result. Invalid specs are skipped and counted.
ScanResult scan(const ScanRequest& request);

}  // namespace bvpcf

#endif  // BVPCF_BVP_ANALYZER_HPP_
