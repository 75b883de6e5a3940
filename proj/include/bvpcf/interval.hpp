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

#ifndef BVPCF_INTERVAL_HPP_
#define BVPCF_INTERVAL_HPP_

#include <gmpxx.h>

#include <optional>

namespace bvpcf {

using Integer = mpz_class;
using Rational = mpq_class;

// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is exact
// on the endpoints, so every result trivially encloses the true range.
class RationalInterval {
 public:
  RationalInterval() = default;
  // Throws kInvalidArgument when lo > hi.
  RationalInterval(Rational lo, Rational hi);

  static RationalInterval point(const Rational& value) { return {value, value}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& value) const {
    return lo_ <= value && value <= hi_;
  }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool intersects(const RationalInterval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }
  std::optional<RationalInterval> intersect(const RationalInterval& other) const;

  // lo > a and hi < b.
  bool strictly_inside(const Rational& a, const Rational& b) const {
    return lo_ > a && hi_ < b;
  }
  // Disjoint from [a, b].
  bool strictly_outside(const Rational& a, const Rational& b) const {
    return hi_ < a || lo_ > b;
  }

  // +1 / -1 when the interval is strictly on one side of zero, else 0.
  int sign() const;

  RationalInterval abs() const;
  // Throws kDivisionByIntervalContainingZero.
  RationalInterval reciprocal() const;
  RationalInterval pow(unsigned long exponent) const;

  RationalInterval operator-() const { return {-hi_, -lo_}; }

  friend RationalInterval operator+(const RationalInterval& a,
                                    const RationalInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
  }
  friend RationalInterval operator-(const RationalInterval& a,
                                    const RationalInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
  }
  friend RationalInterval operator*(const RationalInterval& a,
                                    const RationalInterval& b);
  friend RationalInterval operator/(const RationalInterval& a,
                                    const RationalInterval& b) {
    return a * b.reciprocal();
  }

  friend RationalInterval operator+(const RationalInterval& a, const Rational& s) {
    return {a.lo_ + s, a.hi_ + s};
  }
  friend RationalInterval operator-(const RationalInterval& a, const Rational& s) {
    return {a.lo_ - s, a.hi_ - s};
  }
  friend RationalInterval operator*(const RationalInterval& a, const Rational& s);

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
};

enum class IntervalOp { kAdd, kSub, kMul, kDiv };

RationalInterval interval_arith(const RationalInterval& a,
                                const RationalInterval& b, IntervalOp op);

}  // namespace bvpcf

#endif  // BVPCF_INTERVAL_HPP_
