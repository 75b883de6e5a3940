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

#include "bvpcf/interval.hpp"

#include <algorithm>
#include <array>

#include "bvpcf/error.hpp"

namespace bvpcf {

RationalInterval::RationalInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw Error(Errc::kInvalidArgument,
                "interval lower bound exceeds upper bound");
  }
}

std::optional<RationalInterval> RationalInterval::intersect(
    const RationalInterval& other) const {
  if (!intersects(other)) return std::nullopt;
  return RationalInterval(std::max(lo_, other.lo_), std::min(hi_, other.hi_));
}

int RationalInterval::sign() const {
  if (sgn(lo_) > 0) return 1;
  if (sgn(hi_) < 0) return -1;
  return 0;
}

RationalInterval RationalInterval::abs() const {
  if (sgn(lo_) >= 0) return *this;
  if (sgn(hi_) <= 0) return -*this;
  return {Rational(0), std::max(Rational(-lo_), hi_)};
}

RationalInterval RationalInterval::reciprocal() const {
  if (contains_zero()) {
    throw Error(Errc::kDivisionByIntervalContainingZero,
                "division by an interval containing zero");
  }
  return {1 / hi_, 1 / lo_};
}

RationalInterval RationalInterval::pow(unsigned long exponent) const {
  if (exponent == 0) return point(Rational(1));
  RationalInterval base = *this;
  // Even powers of a zero-straddling interval bottom out at 0.
  if (exponent % 2 == 0) base = base.abs();
  RationalInterval result = point(Rational(1));
  for (unsigned long e = exponent; e != 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  if (sgn(a.lo_) >= 0 && sgn(b.lo_) >= 0) {
    return {a.lo_ * b.lo_, a.hi_ * b.hi_};
  }
  std::array<Rational, 4> corners = {a.lo_ * b.lo_, a.lo_ * b.hi_,
                                     a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [lo, hi] = std::minmax_element(corners.begin(), corners.end());
  return {*lo, *hi};
}

RationalInterval operator*(const RationalInterval& a, const Rational& s) {
  if (sgn(s) >= 0) return {a.lo_ * s, a.hi_ * s};
  return {a.hi_ * s, a.lo_ * s};
}

RationalInterval interval_arith(const RationalInterval& a,
                                const RationalInterval& b, IntervalOp op) {
  switch (op) {
    case IntervalOp::kAdd:
      return a + b;
    case IntervalOp::kSub:
      return a - b;
    case IntervalOp::kMul:
      return a * b;
    case IntervalOp::kDiv:
      return a / b;
  }
  throw Error(Errc::kInvalidArgument, "unknown interval operation");
}

}  // namespace bvpcf
