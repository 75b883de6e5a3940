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

// Certified regular continued fraction expansion of alpha = k^(1/m).
//
// Indexing: theta_n = [b_{n+1}; b_{n+2}, ...] is the complete quotient that
// follows convergent n, so that
//
//   alpha = (p_n theta_n + p_{n-1}) / (q_n theta_n + q_{n-1}).

#ifndef BVPCF_CF_ENGINE_HPP_
#define BVPCF_CF_ENGINE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bvpcf/exact_arith.hpp"

namespace bvpcf {

enum class Side { kAbove, kBelow };

const char* side_name(Side side) noexcept;

// Above iff p^m > k q^m.
Side side_of(const RadicandSpec& spec, const Integer& p, const Integer& q);

struct Convergent {
  long n = 0;  // -2 and -1 are the recurrence seeds
  Integer b;   // 0 for the seeds
  Integer p;
  Integer q;
  Side side = Side::kAbove;

  Rational value() const { return make_rational(p, q); }
};

// (p_{-2}, q_{-2}) = (0, 1) and (p_{-1}, q_{-1}) = (1, 0), in that order.
std::pair<Convergent, Convergent> seed_convergents(const RadicandSpec& spec);

// Applies p_n = b p_{n-1} + p_{n-2}, same for q. Throws kInvalidArgument for
// b < 1 (b_0 of a root of k >= 2 is at least 1 as well).
Convergent convergent_step(const RadicandSpec& spec, const Convergent& older,
                           const Convergent& newer, const Integer& b);

struct PrecisionPolicy {
  unsigned long initial_bits = 64;
  unsigned long max_bits = 1ul << 20;
};

struct ThetaEnclosure {
  long n = 0;
  RationalInterval interval;

  // Enclosure of the fractional part theta_n - b_{n+1}.
  RationalInterval fractional_part(const Integer& next_quotient) const {
    return interval - Rational(next_quotient);
  }
};

class Expansion {
 public:
  Expansion(RadicandSpec spec, std::vector<Convergent> terms,
            unsigned long precision_used)
      : spec_(std::move(spec)),
        terms_(std::move(terms)),
        precision_used_(precision_used) {}

  const RadicandSpec& spec() const { return spec_; }
  const std::vector<Convergent>& terms() const { return terms_; }
  unsigned long precision_used() const { return precision_used_; }

  std::size_t size() const { return terms_.size(); }
  const Convergent& at(std::size_t n) const { return terms_.at(n); }
  // Convergent n - 1; the (1, 0) seed for n = 0.
  Convergent previous(std::size_t n) const;
  std::vector<Integer> quotients() const;

 private:
  RadicandSpec spec_;
  std::vector<Convergent> terms_;
  unsigned long precision_used_;
};

// b_0 ... b_N (N + 1 terms). Interval Gauss map on a dyadic enclosure of
// alpha; any ambiguous floor doubles the precision and restarts. Throws
// kPrecisionCeiling past policy.max_bits.
Expansion expand(const RadicandSpec& spec, std::size_t n_terms,
                 const PrecisionPolicy& policy = {});

// Same contract as expand, computed with verify_quotient alone.
Expansion expand_exact_oracle(const RadicandSpec& spec, std::size_t n_terms);

// theta_n from 1 / (q_n |q_n alpha - p_n|) - q_{n-1} / q_n. Returns nullopt
// when the enclosure is too coarse to separate q_n alpha from p_n.
std::optional<ThetaEnclosure> try_theta_enclosure(const Convergent& conv,
                                                  const Convergent& prev,
                                                  const AlphaEnclosure& alpha);

// Refines from policy.initial_bits until the enclosure exists and its width is
// at most 2^-min_width_bits. Throws kPrecisionCeiling.
ThetaEnclosure theta_enclosure(const RadicandSpec& spec, const Convergent& conv,
                               const Convergent& prev,
                               const PrecisionPolicy& policy = {},
                               unsigned long min_width_bits = 32);

// theta_n >= t, decided exactly.
bool theta_at_least(const RadicandSpec& spec, const Convergent& conv,
                    const Convergent& prev, const Integer& t);

// floor(theta_n) == t, decided exactly.
bool verify_quotient(const RadicandSpec& spec, const Convergent& conv,
                     const Convergent& prev, const Integer& t);

// floor(theta_n) by exponential then binary search over theta_at_least.
Integer next_quotient_exact(const RadicandSpec& spec, const Convergent& conv,
                            const Convergent& prev);

}  // namespace bvpcf

#endif  // BVPCF_CF_ENGINE_HPP_
