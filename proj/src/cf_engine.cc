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

#include "bvpcf/cf_engine.hpp"

#include <string>

#include "bvpcf/error.hpp"

namespace bvpcf {

const char* side_name(Side side) noexcept {
  return side == Side::kAbove ? "above" : "below";
}

Side side_of(const RadicandSpec& spec, const Integer& p, const Integer& q) {
  // q alpha - p < 0  <=>  p/q > alpha
  return sign_linear_in_alpha(spec, q, -p) < 0 ? Side::kAbove : Side::kBelow;
}

std::pair<Convergent, Convergent> seed_convergents(const RadicandSpec& spec) {
  Convergent older{-2, 0, 0, 1, side_of(spec, 0, 1)};
  Convergent newer{-1, 0, 1, 0, side_of(spec, 1, 0)};
  return {older, newer};
}

Convergent convergent_step(const RadicandSpec& spec, const Convergent& older,
                           const Convergent& newer, const Integer& b) {
  if (b < 1) {
    throw Error(Errc::kInvalidArgument, "partial quotient must be positive");
  }
  Convergent next;
  next.n = newer.n + 1;
  next.b = b;
  next.p = b * newer.p + older.p;
  next.q = b * newer.q + older.q;
  next.side = side_of(spec, next.p, next.q);
  return next;
}

Convergent Expansion::previous(std::size_t n) const {
  if (n == 0) return seed_convergents(spec_).second;
  return terms_.at(n - 1);
}

std::vector<Integer> Expansion::quotients() const {
  std::vector<Integer> out;
  out.reserve(terms_.size());
  for (const Convergent& c : terms_) out.push_back(c.b);
  return out;
}

namespace {

std::vector<Convergent> build_convergents(const RadicandSpec& spec,
                                          const std::vector<Integer>& quotients) {
  auto [older, newer] = seed_convergents(spec);
  std::vector<Convergent> terms;
  terms.reserve(quotients.size());
  for (const Integer& b : quotients) {
    Convergent next = convergent_step(spec, older, newer, b);
    terms.push_back(next);
    older = std::move(newer);
    newer = std::move(next);
  }
  return terms;
}

// Runs the interval Gauss map xi -> 1 / (xi - floor(xi)) on an enclosure of
// alpha. Returns nullopt as soon as a floor cannot be decided.
std::optional<std::vector<Integer>> gauss_map_quotients(
    const AlphaEnclosure& alpha, std::size_t n_terms) {
  std::vector<Integer> quotients;
  quotients.reserve(n_terms + 1);
  RationalInterval xi = alpha.interval();
  for (std::size_t n = 0; n <= n_terms; ++n) {
    const Integer b = floor_of(xi.lo());
    if (floor_of(xi.hi()) != b) return std::nullopt;
    const RationalInterval frac = xi - Rational(b);
    if (sgn(frac.lo()) <= 0) return std::nullopt;
    quotients.push_back(b);
    if (n < n_terms) xi = frac.reciprocal();
  }
  return quotients;
}

}  // namespace

Expansion expand(const RadicandSpec& spec, std::size_t n_terms,
                 const PrecisionPolicy& policy) {
  for (unsigned long bits = policy.initial_bits; bits <= policy.max_bits;
       bits *= 2) {
    const AlphaEnclosure alpha = alpha_floor_scaled(spec, bits, 2);
    auto quotients = gauss_map_quotients(alpha, n_terms);
    if (!quotients) continue;

    if (quotients->front() != spec.integer_part()) {
      throw Error(Errc::kInconsistentEnclosures,
                  "enclosure disagrees with floor(alpha)");
    }
    Expansion expansion(spec, build_convergents(spec, *quotients), bits);
    if (n_terms > 0) {
      const Convergent conv = expansion.at(n_terms - 1);
      const Convergent prev = expansion.previous(n_terms - 1);
      if (!verify_quotient(spec, conv, prev, expansion.at(n_terms).b)) {
        throw Error(Errc::kInconsistentEnclosures,
                    "exact oracle rejected the last partial quotient");
      }
    }
    return expansion;
  }
  throw Error(Errc::kPrecisionCeiling,
              "expansion needs more than " + std::to_string(policy.max_bits) +
                  " bits of alpha");
}

Expansion expand_exact_oracle(const RadicandSpec& spec, std::size_t n_terms) {
  auto [older, newer] = seed_convergents(spec);
  std::vector<Convergent> terms;
  terms.reserve(n_terms + 1);
  for (std::size_t n = 0; n <= n_terms; ++n) {
    // With (p_{-1}, q_{-1}) and (p_{-2}, q_{-2}) the "complete quotient" is
    // alpha itself, so b_0 comes out of the same search.
    const Integer b = next_quotient_exact(spec, newer, older);
    Convergent next = convergent_step(spec, older, newer, b);
    terms.push_back(next);
    older = std::move(newer);
    newer = std::move(next);
  }
  return Expansion(spec, std::move(terms), 0);
}

std::optional<ThetaEnclosure> try_theta_enclosure(const Convergent& conv,
                                                  const Convergent& prev,
                                                  const AlphaEnclosure& alpha) {
  const RationalInterval gap = alpha.interval() * Rational(conv.q) - Rational(conv.p);
  if (gap.contains_zero()) return std::nullopt;
  const RationalInterval theta = (gap.abs() * Rational(conv.q)).reciprocal() -
                                 make_rational(prev.q, conv.q);
  return ThetaEnclosure{conv.n, theta};
}

ThetaEnclosure theta_enclosure(const RadicandSpec& spec, const Convergent& conv,
                               const Convergent& prev,
                               const PrecisionPolicy& policy,
                               unsigned long min_width_bits) {
  const Rational target = make_rational(1, Integer(1) << min_width_bits);
  for (unsigned long bits = policy.initial_bits; bits <= policy.max_bits;
       bits *= 2) {
    auto theta = try_theta_enclosure(conv, prev, alpha_floor_scaled(spec, bits, 2));
    if (theta && theta->interval.width() <= target) return *theta;
  }
  throw Error(Errc::kPrecisionCeiling,
              "theta enclosure needs more than " +
                  std::to_string(policy.max_bits) + " bits of alpha");
}

bool theta_at_least(const RadicandSpec& spec, const Convergent& conv,
                    const Convergent& prev, const Integer& t) {
  // theta = (p_{n-1} - q_{n-1} alpha) / (q_n alpha - p_n). Multiply through by
  // the denominator, whose sign is decided exactly.
  const int denominator_sign = sign_linear_in_alpha(spec, conv.q, -conv.p);
  const int numerator_sign = sign_linear_in_alpha(
      spec, -(prev.q + t * conv.q), prev.p + t * conv.p);
  return denominator_sign * numerator_sign >= 0;
}

bool verify_quotient(const RadicandSpec& spec, const Convergent& conv,
                     const Convergent& prev, const Integer& t) {
  return theta_at_least(spec, conv, prev, t) &&
         !theta_at_least(spec, conv, prev, t + 1);
}

Integer next_quotient_exact(const RadicandSpec& spec, const Convergent& conv,
                            const Convergent& prev) {
  // Invariant: theta >= lo, theta < hi.
  Integer lo = 1;
  Integer hi = 2;
  while (theta_at_least(spec, conv, prev, hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (theta_at_least(spec, conv, prev, mid)) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return lo;
}

}  // namespace bvpcf
