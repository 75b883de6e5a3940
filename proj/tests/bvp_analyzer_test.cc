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

#include <gtest/gtest.h>

#include "bvpcf/error.hpp"

namespace bvpcf {
namespace {

// Decimal literal with 16 fractional digits, as a tolerance band.
RationalInterval near(const char* digits, const char* scale = "10000000000000000") {
  const Rational x{Integer(digits), Integer(scale)};
  const Rational tol(1, 100000000000000);
  return {x - tol, x + tol};
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected bvpcf::Error";
  return Errc::kIo;
}

class CubeRootOfTwo : public ::testing::Test {
 protected:
  RadicandSpec spec = validate_spec(2, 3);
  Expansion e = expand(spec, 8);
  AlphaEnclosure alpha = alpha_floor_scaled(spec, 256);
};

TEST_F(CubeRootOfTwo, ExactQuantities) {
  EXPECT_EQ(algebraic_distance(spec, e.at(1)), 10);  // |64 - 54|
  EXPECT_EQ(leading_term(spec, e.at(1)), Rational(8, 5));
  EXPECT_EQ(shifted_leading_term(spec, e.at(1), e.at(0)), Rational(19, 15));
  EXPECT_EQ(algebraic_distance(spec, e.at(2)), 3);   // |125 - 128|
  EXPECT_EQ(leading_term(spec, e.at(2)), Rational(25, 4));
  EXPECT_EQ(shifted_leading_term(spec, e.at(2), e.at(1)), Rational(11, 2));
}

TEST_F(CubeRootOfTwo, RemainderAndCorrection) {
  // R_1 = -0.41981126445159..., R_2 = -0.70026351421761...
  auto r1 = remainder(spec, e.at(1), e.at(0), alpha);
  ASSERT_TRUE(r1.has_value());
  EXPECT_TRUE(r1->intersects(-near("4198112644515909")));
  auto r2 = remainder(spec, e.at(2), e.at(1), alpha);
  ASSERT_TRUE(r2.has_value());
  EXPECT_TRUE(r2->intersects(-near("7002635142176121")));

  // V_1 = 0.08647793111825..., V_2 = -0.04973648578238...
  const RationalInterval v1 = cubic_correction(spec, e.at(1), alpha);
  EXPECT_TRUE(v1.intersects(near("864779311182576", "10000000000000000")));
  EXPECT_EQ(v1.sign(), 1);
  const RationalInterval v2 = cubic_correction(spec, e.at(2), alpha);
  EXPECT_TRUE(v2.intersects(-near("497364857823879", "10000000000000000")));
  EXPECT_EQ(v2.sign(), -1);
  EXPECT_TRUE((-general_correction(spec, e.at(1), alpha)).intersects(v1));
}

TEST_F(CubeRootOfTwo, CubicFormsAgree) {
  for (std::size_t n = 1; n < e.size(); ++n) {
    const RationalInterval closed = cubic_correction_closed_form(spec, e.at(n), alpha);
    const RationalInterval defining = cubic_correction_defining_form(spec, e.at(n), alpha);
    EXPECT_TRUE(closed.intersects(defining)) << n;
    EXPECT_EQ(closed.sign(), e.at(n).side == Side::kAbove ? 1 : -1) << n;
  }
}

TEST_F(CubeRootOfTwo, InverseGapRoutesAgree) {
  for (std::size_t n = 0; n < e.size(); ++n) {
    const RationalInterval sum = inverse_gap_power_sum(spec, e.at(n), alpha);
    auto direct = inverse_gap_direct(e.at(n), alpha);
    ASSERT_TRUE(direct.has_value());
    EXPECT_TRUE(sum.intersects(*direct)) << n;
  }
}

TEST_F(CubeRootOfTwo, ThetaRouteMatchesCorrectionRoute) {
  for (std::size_t n = 1; n < e.size(); ++n) {
    auto from_theta = remainder_from_theta(spec, e.at(n), e.previous(n), alpha);
    ASSERT_TRUE(from_theta.has_value());
    EXPECT_TRUE(from_theta->intersects(
        remainder_from_correction(spec, e.at(n), e.previous(n), alpha)));
  }
}

TEST(Analyzer, CorrectionSumContainsZeroAtAlpha) {
  const RadicandSpec spec = validate_spec(2, 3);
  const RationalInterval alpha = alpha_floor_scaled(spec, 64).interval();
  EXPECT_TRUE(detail::correction_sum(3, alpha.midpoint(), alpha).contains_zero());
}

TEST(Analyzer, CubicFormsRequireDegreeThree) {
  const RadicandSpec spec = validate_spec(50, 10);
  const Expansion e = expand(spec, 2);
  const AlphaEnclosure alpha = alpha_floor_scaled(spec, 128);
  EXPECT_EQ(code_of([&] { cubic_correction(spec, e.at(1), alpha); }), Errc::kWrongDegree);
  EXPECT_EQ(code_of([&] { cubic_correction_closed_form(spec, e.at(1), alpha); }),
            Errc::kWrongDegree);
  EXPECT_EQ(code_of([&] { cubic_correction_defining_form(spec, e.at(1), alpha); }),
            Errc::kWrongDegree);
}

TEST(Analyzer, TenthRootOfFiftyAtIndexOne) {
  const RadicandSpec spec = validate_spec(50, 10);
  const Expansion e = expand(spec, 3);
  const AlphaEnclosure alpha = alpha_floor_scaled(spec, 256);
  EXPECT_EQ(algebraic_distance(spec, e.at(1)), 7849);  // |59049 - 51200|
  EXPECT_EQ(leading_term(spec, e.at(1)), Rational(98415, 7849));
  const auto [num, den] = leading_term_unreduced(spec, e.at(1));
  EXPECT_EQ(num, 196830);
  EXPECT_EQ(den, 15698);

  auto terms = try_bvp_terms(spec, e.at(1), e.at(0), alpha);
  ASSERT_TRUE(terms.has_value());
  // theta_1 = 11.2689352933875..., R_1 = -1.2696046480062..., W_1 = -0.7696046480062...
  EXPECT_TRUE(terms->theta.intersects(near("112689352933875100")));
  EXPECT_TRUE(terms->R.intersects(-near("12696046480062979")));
  EXPECT_TRUE(terms->W.intersects(-near("7696046480062979")));
  EXPECT_TRUE(terms->R.strictly_outside(-1, 1));
  EXPECT_FALSE(terms->V.has_value());
}

TEST(Analyzer, TryTermsUndecidedAtCoarsePrecision) {
  const RadicandSpec spec = validate_spec(2, 3);
  const Expansion e = expand(spec, 40);
  EXPECT_FALSE(try_bvp_terms(spec, e.at(35), e.at(34), alpha_floor_scaled(spec, 8)));
}

TEST(PredictNext, Examples) {
  const RadicandSpec cbrt2 = validate_spec(2, 3);
  const Expansion e = expand(cbrt2, 4);
  const PredictionOutcome p1 = predict_next(cbrt2, e.at(1), e.at(0));
  EXPECT_EQ(p1.candidate, 1);
  EXPECT_EQ(p1.epsilon, 0);
  EXPECT_EQ(p1.actual, 1);
  EXPECT_TRUE(p1.formula_held);
  const PredictionOutcome p2 = predict_next(cbrt2, e.at(2), e.at(1));
  EXPECT_EQ(p2.candidate, 5);
  EXPECT_EQ(p2.predicted, 5);
  EXPECT_EQ(p2.actual, 5);
  EXPECT_EQ(p2.floor_H, 6);
  EXPECT_TRUE(p2.fractional_part_nonzero);
  EXPECT_TRUE(p2.window_held);

  const RadicandSpec s = validate_spec(50, 10);
  const Expansion f = expand(s, 3);
  const PredictionOutcome q1 = predict_next(s, f.at(1), f.at(0));
  EXPECT_EQ(q1.floor_H, 12);
  EXPECT_EQ(q1.candidate, 12);
  EXPECT_EQ(q1.actual, 11);
  EXPECT_EQ(q1.offset, -1);
  EXPECT_FALSE(q1.epsilon.has_value());
  EXPECT_FALSE(q1.formula_held);
  EXPECT_TRUE(q1.window_held);
}

TEST(PredictNext, IntegralShiftedTermUndershoots) {
  // k = 3: p/q = 3/2, d = 3, H = 9/2, A = 4 exactly, b_2 = 3.
  const RadicandSpec spec = validate_spec(3, 3);
  const Expansion e = expand(spec, 3);
  const PredictionOutcome p = predict_next(spec, e.at(1), e.at(0));
  EXPECT_EQ(p.candidate, 4);
  EXPECT_EQ(p.actual, 3);
  EXPECT_EQ(p.offset, -1);
  EXPECT_FALSE(p.fractional_part_nonzero);
  EXPECT_FALSE(p.formula_held);
  EXPECT_TRUE(p.window_held);
}

TEST(PredictNext, MatchesExpansionAcrossCubics) {
  for (unsigned long k = 2; k <= 40; ++k) {
    if (k == 8 || k == 27) continue;
    const RadicandSpec spec = validate_spec(k, 3);
    const Expansion e = expand(spec, 25);
    for (std::size_t n = 1; n + 1 < e.size(); ++n) {
      if (e.at(n).q < 2) continue;
      const PredictionOutcome p = predict_next(spec, e.at(n), e.previous(n));
      ASSERT_EQ(p.actual, e.at(n + 1).b) << k << " " << n;
      ASSERT_EQ(p.offset, p.actual - p.candidate);
      if (p.epsilon) ASSERT_EQ(p.predicted, p.candidate + *p.epsilon);
    }
  }
}

std::size_t count(const TheoremReport& r, Quantity quantity) {
  std::size_t total = 0;
  for (const ViolationRecord& v : r.violations) total += v.quantity == quantity;
  return total;
}

TEST(VerifyTheorems, CubeRootOfTwoCertifiedClaimsHold) {
  const TheoremReport r = verify_theorems(validate_spec(2, 3), 30);
  EXPECT_EQ(count(r, Quantity::kRemainderBound), 0u);
  EXPECT_EQ(count(r, Quantity::kWindowAbove), 0u);
  EXPECT_EQ(count(r, Quantity::kEpsilonRange), 0u);
  // The below-side lower bound is measured, and fails already at n = 2.
  ASSERT_FALSE(r.violations.empty());
  const ViolationRecord& first = r.violations.front();
  EXPECT_EQ(first.quantity, Quantity::kWindowBelow);
  EXPECT_EQ(first.n, 2);
  EXPECT_EQ(first.claimed, "H_n <= b_{n+1}");
  EXPECT_EQ(first.b, 5);
  EXPECT_TRUE(recheck_violation(first));
  ASSERT_FALSE(r.checks.empty());
  EXPECT_EQ(r.checks.front().n, 1);
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped.front().n, 0);
  EXPECT_EQ(r.thresholds.remainder, 1);
  EXPECT_EQ(r.thresholds.window, 1);
  for (const IndexCheck& c : r.checks) {
    EXPECT_TRUE(c.remainder_below_one) << c.n;
    ASSERT_TRUE(c.v_sign_matches.has_value());
    EXPECT_TRUE(*c.v_sign_matches) << c.n;
    EXPECT_EQ(c.below_claims.has_value(), c.conv.side == Side::kBelow);
  }
}

TEST(VerifyTheorems, TenthRootOfFiftyHasOneRemainderViolation) {
  const TheoremReport r = verify_theorems(validate_spec(50, 10), 20);
  ASSERT_EQ(r.violations.size(), 1u);
  const ViolationRecord& v = r.violations.front();
  EXPECT_EQ(v.quantity, Quantity::kRemainderBound);
  EXPECT_EQ(v.n, 1);
  EXPECT_EQ(v.p, 3);
  EXPECT_EQ(v.q, 2);
  EXPECT_EQ(v.b, 11);
  EXPECT_EQ(v.d, 7849);
  EXPECT_EQ(r.thresholds.remainder, 2);
  EXPECT_TRUE(recheck_violation(v));
}

TEST(VerifyTheorems, CubeRootOfThreeEpsilonRecord) {
  const TheoremReport r = verify_theorems(validate_spec(3, 3), 20);
  ASSERT_EQ(count(r, Quantity::kEpsilonRange), 1u);
  const ViolationRecord& v = r.violations.front();
  EXPECT_EQ(v.quantity, Quantity::kEpsilonRange);
  EXPECT_EQ(v.n, 1);
  EXPECT_EQ(v.claimed, "eps_n in {0, 1}");
  EXPECT_EQ(std::get<Integer>(v.observed), -1);
  EXPECT_TRUE(recheck_violation(v));
}

TEST(RecheckViolation, RejectsTamperedRecords) {
  const TheoremReport r = verify_theorems(validate_spec(50, 10), 5);
  ASSERT_EQ(r.violations.size(), 1u);
  ViolationRecord wrong_b = r.violations.front();
  wrong_b.b = 12;
  EXPECT_FALSE(recheck_violation(wrong_b));
  ViolationRecord wrong_d = r.violations.front();
  wrong_d.d = 7848;
  EXPECT_FALSE(recheck_violation(wrong_d));
  ViolationRecord not_adjacent = r.violations.front();
  not_adjacent.p_prev = 2;
  EXPECT_FALSE(recheck_violation(not_adjacent));
}

TEST(Scan, EmptyRangeProducesNoCells) {
  ScanRequest req;
  req.k_lo = 10;
  req.k_hi = 5;
  const ScanResult r = scan(req);
  EXPECT_TRUE(r.cells.empty());
  EXPECT_TRUE(r.violations.empty());
}

TEST(Scan, SingleCellAndInvalidSpecs) {
  ScanRequest req;
  req.k_lo = 50;
  req.k_hi = 50;
  req.m_lo = req.m_hi = 10;
  req.max_index = 20;
  const ScanResult r = scan(req);
  ASSERT_EQ(r.cells.size(), 1u);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations.front().quantity, Quantity::kRemainderBound);

  ScanRequest cubes;
  cubes.k_lo = 7;
  cubes.k_hi = 9;
  cubes.max_index = 5;
  const ScanResult c = scan(cubes);
  ASSERT_EQ(c.cells.size(), 3u);
  EXPECT_EQ(c.skipped, 1u);
  EXPECT_FALSE(c.cells[1].valid);
  EXPECT_EQ(c.failed, 0u);
}

TEST(Scan, ThreadCountDoesNotChangeResults) {
  ScanRequest req;
  req.k_lo = 2;
  req.k_hi = 60;
  req.m_lo = 3;
  req.m_hi = 4;
  req.max_index = 15;
  req.threads = 1;
  const ScanResult one = scan(req);
  req.threads = 8;
  const ScanResult many = scan(req);
  ASSERT_EQ(one.cells.size(), many.cells.size());
  ASSERT_EQ(one.violations.size(), many.violations.size());
  for (std::size_t i = 0; i < one.violations.size(); ++i) {
    EXPECT_EQ(one.violations[i].k, many.violations[i].k);
    EXPECT_EQ(one.violations[i].n, many.violations[i].n);
    EXPECT_EQ(one.violations[i].quantity, many.violations[i].quantity);
  }
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    EXPECT_EQ(one.cells[i].k, many.cells[i].k);
    EXPECT_EQ(one.cells[i].thresholds.remainder, many.cells[i].thresholds.remainder);
  }
}

}  // namespace
}  // namespace bvpcf
