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

// Exact integer/rational kernel for alpha = k^(1/m).
//
// Every decision about alpha made anywhere in the library bottoms out in one
// of two places: sign_linear_in_alpha (pure integer comparison) or an
// AlphaEnclosure (a provably correct dyadic/decimal bracket of alpha).

#ifndef BVPCF_EXACT_ARITH_HPP_
#define BVPCF_EXACT_ARITH_HPP_

#include <gmpxx.h>

#include <string>

#include "bvpcf/interval.hpp"

namespace bvpcf {

Integer ipow(const Integer& base, unsigned long exponent);

// Largest r with r^m <= x. Throws kInvalidArgument for x < 0 or m == 0.
Integer int_nth_root(const Integer& x, unsigned long m);

// Builds num/den in canonical form. Throws kInvalidArgument for den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

// Parses a base-10 integer; throws kInvalidArgument on malformed input.
Integer parse_integer(const std::string& text);

// The pair (k, m) with alpha = k^(1/m) irrational of degree exactly m.
// Instances only come out of validate(), so holding one is proof of validity.
class RadicandSpec {
 public:
  // Throws kInvalidDegree when m < 2 and kPerfectPower when k = r^p for a
  // prime p dividing m (this includes k = 1). k <= 0 is kInvalidArgument.
  static RadicandSpec validate(const Integer& k, unsigned long m);

  const Integer& k() const { return k_; }
  unsigned long m() const { return m_; }

  // floor(alpha), i.e. b_0.
  Integer integer_part() const { return int_nth_root(k_, m_); }

  friend bool operator==(const RadicandSpec& a, const RadicandSpec& b) {
    return a.k_ == b.k_ && a.m_ == b.m_;
  }

 private:
  RadicandSpec(Integer k, unsigned long m) : k_(std::move(k)), m_(m) {}

  Integer k_;
  unsigned long m_;
};

inline RadicandSpec validate_spec(const Integer& k, unsigned long m) {
  return RadicandSpec::validate(k, m);
}

// Sign of u*alpha + v decided with integer arithmetic only. Never returns 0
// when u != 0.
int sign_linear_in_alpha(const RadicandSpec& spec, const Integer& u,
                         const Integer& v);

// scaled_floor = floor(alpha * base^precision_digits).
struct AlphaEnclosure {
  RadicandSpec spec;
  unsigned long precision_digits;
  Integer scaled_floor;
  unsigned base;

  Integer scale() const;
  // [A / B^D, (A + 1) / B^D]
  RationalInterval interval() const;
};

AlphaEnclosure alpha_floor_scaled(const RadicandSpec& spec,
                                  unsigned long precision_digits,
                                  unsigned base = 2);

}  // namespace bvpcf

#endif  // BVPCF_EXACT_ARITH_HPP_
