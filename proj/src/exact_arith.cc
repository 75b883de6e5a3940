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

#include "bvpcf/exact_arith.hpp"

#include <vector>

#include "bvpcf/error.hpp"

namespace bvpcf {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kInvalidArgument:
      return "InvalidArgument";
    case Errc::kPerfectPower:
      return "PerfectPower";
    case Errc::kInvalidDegree:
      return "InvalidDegree";
    case Errc::kPrecisionCeiling:
      return "PrecisionCeiling";
    case Errc::kDivisionByIntervalContainingZero:
      return "DivisionByIntervalContainingZero";
    case Errc::kInconsistentEnclosures:
      return "InconsistentEnclosures";
    case Errc::kWrongDegree:
      return "WrongDegree";
    case Errc::kIo:
      return "Io";
  }
  return "Unknown";
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer int_nth_root(const Integer& x, unsigned long m) {
  if (sgn(x) < 0) {
    throw Error(Errc::kInvalidArgument, "int_nth_root of a negative integer");
  }
  if (m == 0) throw Error(Errc::kInvalidArgument, "int_nth_root with m = 0");
  if (m == 1 || x < 2) return x;

  const size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (m >= bits) return 1;  // 2^m > x

  // Start strictly above the root: (2^ceil(bits/m))^m >= 2^bits > x. Integer
  // Newton steps from above decrease monotonically and stop at the floor.
  Integer r = Integer(1) << static_cast<mp_bitcnt_t>((bits + m - 1) / m);
  Integer next;
  for (;;) {
    next = (Integer(m - 1) * r + x / ipow(r, m - 1)) / m;
    if (next >= r) break;
    r = next;
  }
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw Error(Errc::kInvalidArgument, "rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Integer parse_integer(const std::string& text) {
  Integer out;
  std::string body = text;
  if (!body.empty() && body.front() == '+') body.erase(0, 1);
  const bool digits_only =
      !body.empty() &&
      body.find_first_not_of("0123456789", body.front() == '-' ? 1 : 0) ==
          std::string::npos &&
      body != "-";
  if (!digits_only || out.set_str(body, 10) != 0) {
    throw Error(Errc::kInvalidArgument, "not a base-10 integer: '" + text + "'");
  }
  return out;
}

namespace {

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

// x^m - k with k > 0 is irreducible over Q iff k is not a p-th power for any
// prime p | m (the -4c^4 exception needs k < 0).
RadicandSpec RadicandSpec::validate(const Integer& k, unsigned long m) {
  if (m < 2) {
    throw Error(Errc::kInvalidDegree,
                "root degree must be at least 2, got " + std::to_string(m));
  }
  if (sgn(k) <= 0) {
    throw Error(Errc::kInvalidArgument, "radicand must be positive");
  }
  if (k == 1) {
    throw Error(Errc::kPerfectPower, "k = 1 is a perfect power");
  }
  for (unsigned long p : prime_divisors(m)) {
    const Integer r = int_nth_root(k, p);
    if (ipow(r, p) == k) {
      throw Error(Errc::kPerfectPower,
                  "k = " + k.get_str() + " = " + r.get_str() + "^" +
                      std::to_string(p) + "; x^" +
                      std::to_string(m) + " - k is reducible");
    }
  }
  return RadicandSpec(k, m);
}

int sign_linear_in_alpha(const RadicandSpec& spec, const Integer& u,
                         const Integer& v) {
  const int su = sgn(u);
  const int sv = sgn(v);
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  // Opposite signs: compare |u| * alpha with |v| through m-th powers.
  const Integer lhs = spec.k() * ipow(abs(u), spec.m());
  const Integer rhs = ipow(abs(v), spec.m());
  // lhs != rhs since alpha is irrational.
  return lhs > rhs ? su : sv;
}

Integer AlphaEnclosure::scale() const {
  if (base == 2) return Integer(1) << static_cast<mp_bitcnt_t>(precision_digits);
  return ipow(Integer(base), precision_digits);
}

RationalInterval AlphaEnclosure::interval() const {
  const Integer s = scale();
  return {make_rational(scaled_floor, s), make_rational(scaled_floor + 1, s)};
}

AlphaEnclosure alpha_floor_scaled(const RadicandSpec& spec,
                                  unsigned long precision_digits,
                                  unsigned base) {
  if (base < 2) throw Error(Errc::kInvalidArgument, "enclosure base must be >= 2");
  Integer scaled_k;
  if (base == 2) {
    scaled_k = spec.k() << static_cast<mp_bitcnt_t>(spec.m() * precision_digits);
  } else {
    scaled_k = spec.k() * ipow(Integer(base), spec.m() * precision_digits);
  }
  return AlphaEnclosure{spec, precision_digits,
                        int_nth_root(scaled_k, spec.m()), base};
}

}  // namespace bvpcf
