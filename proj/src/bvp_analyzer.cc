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

#include "bvpcf/bvp_analyzer.hpp"

#include <string>

#include "bvpcf/error.hpp"

namespace bvpcf {

Integer algebraic_distance(const RadicandSpec& spec, const Convergent& conv) {
  return abs(ipow(conv.p, spec.m()) - spec.k() * ipow(conv.q, spec.m()));
}

std::pair<Integer, Integer> leading_term_unreduced(const RadicandSpec& spec,
                                                   const Convergent& conv) {
  return {Integer(spec.m()) * ipow(conv.p, spec.m() - 1),
          algebraic_distance(spec, conv) * conv.q};
}

Rational leading_term(const RadicandSpec& spec, const Convergent& conv) {
  auto [num, den] = leading_term_unreduced(spec, conv);
  return make_rational(num, den);
}

Rational shifted_leading_term(const RadicandSpec& spec, const Convergent& conv,
                              const Convergent& prev) {
  return leading_term(spec, conv) - make_rational(prev.q, conv.q);
}

namespace detail {

RationalInterval correction_sum(unsigned long m, const Rational& x,
                                const RationalInterval& alpha) {
  // alpha^i for i = 0 .. m-1
  std::vector<RationalInterval> alpha_powers;
  alpha_powers.reserve(m);
  alpha_powers.push_back(RationalInterval::point(Rational(1)));
  for (unsigned long i = 1; i < m; ++i) {
    alpha_powers.push_back(alpha_powers.back() * alpha);
  }
  RationalInterval sum = RationalInterval::point(Rational(0));
  Rational x_power = 1;
  for (unsigned long j = 0; j < m; ++j) {
    sum = sum + alpha_powers[m - 1 - j] * x_power;
    if (j + 1 < m) x_power *= x;
  }
  return sum - Rational(m) * x_power;
}

}  // namespace detail

namespace {

Rational power_sum_scale(const RadicandSpec& spec, const Convergent& conv) {
  return make_rational(ipow(conv.q, spec.m() - 2), algebraic_distance(spec, conv));
}

void require_cubic(const RadicandSpec& spec) {
  if (spec.m() != 3) {
    throw Error(Errc::kWrongDegree, "cubic correction requires m = 3, got m = " +
                                        std::to_string(spec.m()));
  }
}

}  // namespace

RationalInterval general_correction(const RadicandSpec& spec,
                                    const Convergent& conv,
                                    const AlphaEnclosure& alpha) {
  return detail::correction_sum(spec.m(), conv.value(), alpha.interval()) *
         power_sum_scale(spec, conv);
}

RationalInterval remainder_from_correction(const RadicandSpec& spec,
                                           const Convergent& conv,
                                           const Convergent& prev,
                                           const AlphaEnclosure& alpha) {
  return general_correction(spec, conv, alpha) - make_rational(prev.q, conv.q);
}

std::optional<RationalInterval> remainder_from_theta(const RadicandSpec& spec,
                                                     const Convergent& conv,
                                                     const Convergent& prev,
                                                     const AlphaEnclosure& alpha) {
  auto theta = try_theta_enclosure(conv, prev, alpha);
  if (!theta) return std::nullopt;
  return theta->interval - leading_term(spec, conv);
}

std::optional<RationalInterval> remainder(const RadicandSpec& spec,
                                          const Convergent& conv,
                                          const Convergent& prev,
                                          const AlphaEnclosure& alpha) {
  auto via_theta = remainder_from_theta(spec, conv, prev, alpha);
  if (!via_theta) return std::nullopt;
  auto both = via_theta->intersect(remainder_from_correction(spec, conv, prev, alpha));
  if (!both) {
    throw Error(Errc::kInconsistentEnclosures,
                "remainder enclosures are disjoint at n = " + std::to_string(conv.n));
  }
  return both;
}

std::optional<RationalInterval> inverse_gap_direct(const Convergent& conv,
                                                   const AlphaEnclosure& alpha) {
  const RationalInterval gap =
      (RationalInterval::point(conv.value()) - alpha.interval()).abs();
  if (gap.contains_zero()) return std::nullopt;
  return (gap * Rational(conv.q * conv.q)).reciprocal();
}

RationalInterval inverse_gap_power_sum(const RadicandSpec& spec,
                                       const Convergent& conv,
                                       const AlphaEnclosure& alpha) {
  const unsigned long m = spec.m();
  // The correction sum plus m x^(m-1) is the plain power sum.
  const Rational x = conv.value();
  Rational top = 1;
  for (unsigned long j = 0; j + 1 < m; ++j) top *= x;
  return (detail::correction_sum(m, x, alpha.interval()) + Rational(m) * top) *
         power_sum_scale(spec, conv);
}

RationalInterval cubic_correction_closed_form(const RadicandSpec& spec,
                                              const Convergent& conv,
                                              const AlphaEnclosure& alpha) {
  require_cubic(spec);
  const Rational x = conv.value();
  const RationalInterval a = alpha.interval();
  const RationalInterval numerator = a + Rational(2 * x);
  const RationalInterval denominator =
      (a * a + a * x + Rational(x * x)) * Rational(conv.q * conv.q);
  const RationalInterval magnitude = numerator / denominator;
  return conv.side == Side::kAbove ? magnitude : -magnitude;
}

RationalInterval cubic_correction_defining_form(const RadicandSpec& spec,
                                                const Convergent& conv,
                                                const AlphaEnclosure& alpha) {
  require_cubic(spec);
  const Rational x = conv.value();
  const RationalInterval a = alpha.interval();
  const RationalInterval body = -(a * x) - a * a + Rational(2 * x * x);
  return body * make_rational(conv.q, algebraic_distance(spec, conv));
}

RationalInterval cubic_correction(const RadicandSpec& spec,
                                  const Convergent& conv,
                                  const AlphaEnclosure& alpha) {
  auto both = cubic_correction_closed_form(spec, conv, alpha)
                  .intersect(cubic_correction_defining_form(spec, conv, alpha));
  if (!both) {
    throw Error(Errc::kInconsistentEnclosures,
                "cubic correction forms are disjoint at n = " + std::to_string(conv.n));
  }
  return *both;
}

std::optional<BvpTerms> try_bvp_terms(const RadicandSpec& spec,
                                      const Convergent& conv,
                                      const Convergent& prev,
                                      const AlphaEnclosure& alpha) {
  auto theta = try_theta_enclosure(conv, prev, alpha);
  if (!theta) return std::nullopt;
  BvpTerms terms;
  terms.n = conv.n;
  terms.d = algebraic_distance(spec, conv);
  terms.H = leading_term(spec, conv);
  terms.A = terms.H - make_rational(prev.q, conv.q);
  terms.theta = theta->interval;
  terms.W = general_correction(spec, conv, alpha);
  auto R = (theta->interval - terms.H)
               .intersect(terms.W - make_rational(prev.q, conv.q));
  if (!R) {
    throw Error(Errc::kInconsistentEnclosures,
                "remainder enclosures are disjoint at n = " + std::to_string(conv.n));
  }
  terms.R = *R;
  if (spec.m() == 3) terms.V = cubic_correction(spec, conv, alpha);
  terms.side = conv.side;
  terms.precision_bits = alpha.precision_digits;
  return terms;
}

PredictionOutcome predict_next(const RadicandSpec& spec, const Convergent& conv,
                               const Convergent& prev) {
  PredictionOutcome out;
  out.n = conv.n;
  const Rational H = leading_term(spec, conv);
  const Rational A = H - make_rational(prev.q, conv.q);
  out.floor_H = floor_of(H);
  out.candidate = floor_of(A);
  out.fractional_part_nonzero = A.get_den() != 1;

  if (verify_quotient(spec, conv, prev, out.candidate)) {
    out.epsilon = 0;
  } else if (verify_quotient(spec, conv, prev, out.candidate + 1)) {
    out.epsilon = 1;
  }
  if (out.epsilon) {
    out.predicted = out.candidate + *out.epsilon;
    out.actual = out.predicted;
  } else {
    out.predicted = out.candidate;
    out.actual = next_quotient_exact(spec, conv, prev);
  }
  out.offset = out.actual - out.candidate;
  out.formula_held = out.predicted == out.actual;
  const Rational actual(out.actual);
  out.window_held = H - 2 < actual && actual <= H;
  return out;
}

const char* quantity_name(Quantity quantity) noexcept {
  switch (quantity) {
    case Quantity::kRemainderBound:
      return "RemainderBound";
    case Quantity::kWindowAbove:
      return "WindowAbove";
    case Quantity::kWindowBelow:
      return "WindowBelow";
    case Quantity::kEpsilonRange:
      return "EpsilonRange";
  }
  return "Unknown";
}

namespace {

constexpr const char* kClaimRemainder = "|R_n| < 1";
constexpr const char* kClaimWindowAbove = "H_n - 2 < b_{n+1} <= H_n";
constexpr const char* kClaimBelowLower = "H_n <= b_{n+1}";
constexpr const char* kClaimBelowUpper = "b_{n+1} < H_n + 2";
constexpr const char* kClaimEpsilonAbove = "eps_n in {0, 1}";
constexpr const char* kClaimEpsilonBelow = "eps_n in {-1, 0}";

bool r_decided(const RationalInterval& R) {
  return R.strictly_inside(-1, 1) || R.strictly_outside(-1, 1);
}

// Refines until |R_n| < 1 is decided, the enclosures are narrow, and for
// m = 3 the defining form of V_n has a definite sign.
struct Refined {
  BvpTerms terms;
  std::optional<int> defining_sign;
};

Refined refine_terms(const RadicandSpec& spec, const Convergent& conv,
                     const Convergent& prev, unsigned long& bits,
                     const PrecisionPolicy& policy) {
  const Rational target = make_rational(1, Integer(1) << 32);
  for (; bits <= policy.max_bits; bits *= 2) {
    const AlphaEnclosure alpha = alpha_floor_scaled(spec, bits, 2);
    auto terms = try_bvp_terms(spec, conv, prev, alpha);
    if (!terms || !r_decided(terms->R)) continue;
    if (terms->R.width() > target || terms->theta.width() > target) continue;
    std::optional<int> defining_sign;
    if (spec.m() == 3) {
      const int s = cubic_correction_defining_form(spec, conv, alpha).sign();
      if (s == 0) continue;
      defining_sign = s;
    }
    return {std::move(*terms), defining_sign};
  }
  throw Error(Errc::kPrecisionCeiling,
              "certifying R_" + std::to_string(conv.n) + " needs more than " +
                  std::to_string(policy.max_bits) + " bits of alpha");
}

ViolationRecord make_record(const RadicandSpec& spec, const IndexCheck& check,
                            const Convergent& prev, Quantity quantity,
                            std::variant<RationalInterval, Integer> observed,
                            std::string claimed) {
  ViolationRecord r;
  r.k = spec.k();
  r.m = spec.m();
  r.n = check.n;
  r.quantity = quantity;
  r.observed = std::move(observed);
  r.claimed = std::move(claimed);
  r.p = check.conv.p;
  r.q = check.conv.q;
  r.b = check.next_quotient;
  r.d = check.terms.d;
  r.p_prev = prev.p;
  r.q_prev = prev.q;
  return r;
}

template <typename Pred>
std::optional<long> threshold(const std::vector<IndexCheck>& checks, Pred holds) {
  if (checks.empty()) return std::nullopt;
  std::optional<long> start = checks.front().n;
  for (const IndexCheck& c : checks) {
    if (!holds(c)) start.reset();
    else if (!start) start = c.n;
  }
  return start;
}

}  // namespace

TheoremReport verify_theorems(const RadicandSpec& spec, std::size_t max_index,
                              const PrecisionPolicy& policy) {
  TheoremReport report{spec, expand(spec, max_index + 1, policy), {}, {}, {}, {},
                       policy.initial_bits};
  const Expansion& expansion = report.expansion;
  const bool cubic = spec.m() == 3;
  unsigned long bits = policy.initial_bits;

  for (std::size_t n = 0; n <= max_index; ++n) {
    const Convergent& conv = expansion.at(n);
    const Convergent prev = expansion.previous(n);
    if (conv.q < 2) {
      report.skipped.push_back(
          {conv.n, n == 0 ? "q_0 = 1; q_{-1}/q_0 = 0 is degenerate" : "q_n < 2"});
      continue;
    }

    IndexCheck check;
    check.n = conv.n;
    check.conv = conv;
    check.next_quotient = expansion.at(n + 1).b;
    Refined refined = refine_terms(spec, conv, prev, bits, policy);
    check.terms = std::move(refined.terms);
    check.prediction = predict_next(spec, conv, prev);
    if (check.prediction.actual != check.next_quotient) {
      throw Error(Errc::kInconsistentEnclosures,
                  "predictor and expansion disagree on b_" + std::to_string(n + 1));
    }

    const Rational& H = check.terms.H;
    const Rational b(check.next_quotient);
    check.remainder_below_one = check.terms.R.strictly_inside(-1, 1);
    check.above_window_held = H - 2 < b && b <= H;
    check.general_window_held = b <= H && b + 2 > H;
    if (cubic) {
      check.v_sign_matches =
          *refined.defining_sign == (conv.side == Side::kAbove ? 1 : -1);
      if (conv.side == Side::kBelow) {
        const Integer& offset = check.prediction.offset;
        check.below_claims = BelowSideClaims{H <= b, b < H + 2,
                                             offset == -1 || offset == 0};
      }
    }

    if (!check.remainder_below_one) {
      report.violations.push_back(make_record(spec, check, prev,
                                              Quantity::kRemainderBound,
                                              check.terms.R, kClaimRemainder));
    }
    if (conv.side == Side::kAbove && !check.above_window_held) {
      report.violations.push_back(make_record(spec, check, prev,
                                              Quantity::kWindowAbove,
                                              check.next_quotient,
                                              kClaimWindowAbove));
    }
    if (check.below_claims) {
      if (!check.below_claims->lower_bound) {
        report.violations.push_back(make_record(spec, check, prev,
                                                Quantity::kWindowBelow,
                                                check.next_quotient,
                                                kClaimBelowLower));
      }
      if (!check.below_claims->upper_bound) {
        report.violations.push_back(make_record(spec, check, prev,
                                                Quantity::kWindowBelow,
                                                check.next_quotient,
                                                kClaimBelowUpper));
      }
      if (!check.below_claims->epsilon_range) {
        report.violations.push_back(make_record(spec, check, prev,
                                                Quantity::kEpsilonRange,
                                                check.prediction.offset,
                                                kClaimEpsilonBelow));
      }
    }
    if (cubic && conv.side == Side::kAbove && !check.prediction.formula_held) {
      report.violations.push_back(make_record(spec, check, prev,
                                              Quantity::kEpsilonRange,
                                              check.prediction.offset,
                                              kClaimEpsilonAbove));
    }
    report.checks.push_back(std::move(check));
  }

  report.thresholds.remainder = threshold(
      report.checks, [](const IndexCheck& c) { return c.remainder_below_one; });
  report.thresholds.window = threshold(
      report.checks, [](const IndexCheck& c) { return c.general_window_held; });
  report.precision_bits = bits;
  return report;
}

bool recheck_violation(const ViolationRecord& record, const PrecisionPolicy& policy) {
  const RadicandSpec spec = RadicandSpec::validate(record.k, record.m);
  const Convergent conv{record.n, 0, record.p, record.q,
                        side_of(spec, record.p, record.q)};
  const Convergent prev{record.n - 1, 0, record.p_prev, record.q_prev,
                        side_of(spec, record.p_prev, record.q_prev)};
  if (abs(conv.p * prev.q - prev.p * conv.q) != 1) return false;
  if (algebraic_distance(spec, conv) != record.d) return false;
  if (!verify_quotient(spec, conv, prev, record.b)) return false;

  const Rational H = leading_term(spec, conv);
  const Rational b(record.b);
  const Integer offset = record.b - floor_of(H - make_rational(prev.q, conv.q));
  switch (record.quantity) {
    case Quantity::kRemainderBound: {
      unsigned long bits = policy.initial_bits;
      return !refine_terms(spec, conv, prev, bits, policy)
                  .terms.R.strictly_inside(-1, 1);
    }
    case Quantity::kWindowAbove:
      return conv.side == Side::kAbove && !(H - 2 < b && b <= H);
    case Quantity::kWindowBelow:
      if (conv.side != Side::kBelow) return false;
      if (record.claimed == kClaimBelowLower) return !(H <= b);
      if (record.claimed == kClaimBelowUpper) return !(b < H + 2);
      return false;
    case Quantity::kEpsilonRange:
      if (record.claimed == kClaimEpsilonAbove) return !(offset == 0 || offset == 1);
      if (record.claimed == kClaimEpsilonBelow) return !(offset == -1 || offset == 0);
      return false;
  }
  return false;
}

}  // namespace bvpcf
