// Copyright 2026 The cyclo4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "cyclo4/galois_ring.hpp"
#include "cyclo4/gf2_polynomial.hpp"
#include "cyclo4/sequence.hpp"
#include "support.hpp"

namespace cyclo4 {
namespace {

using testing::Gen;
using testing::z4;

// Reference irreducibility: no factor of degree 1..r/2.
bool irreducible_by_trial_division(std::uint64_t bits) {
  const Gf2Polynomial h(bits);
  const std::size_t r = h.degree().value();
  for (std::uint64_t d = 2; d < (std::uint64_t{1} << (r / 2 + 1)); ++d) {
    if ((h % Gf2Polynomial(d)).is_zero()) return false;
  }
  return r >= 1;
}

// Number of monic irreducibles of degree n over GF(2): (1/n) sum_{d|n} mu(d) 2^(n/d).
std::uint64_t necklace_count(std::uint64_t n) {
  const auto mu = [](std::uint64_t m) {
    int sign = 1;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      m /= q;
      if (m % q == 0) return 0;
      sign = -sign;
    }
    return m > 1 ? -sign : sign;
  };
  std::int64_t sum = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) sum += mu(d) * (std::int64_t{1} << (n / d));
  }
  return static_cast<std::uint64_t>(sum) / n;
}

GaloisRing ring_of(std::uint64_t bits) { return GaloisRing(Gf2Polynomial(bits)); }

TEST(Gf2, SmallestIrreducibles) {
  EXPECT_EQ(smallest_irreducible(1), Gf2Polynomial(0b10));
  EXPECT_EQ(smallest_irreducible(2), Gf2Polynomial(0b111));
  EXPECT_EQ(smallest_irreducible(3), Gf2Polynomial(0b1011));
  EXPECT_EQ(smallest_irreducible(4), Gf2Polynomial(0b10011));
  EXPECT_THROW((void)smallest_irreducible(0), InvalidArgument);
}

TEST(Gf2, IrreducibleCountsMatchNecklaceFormula) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t bits = std::uint64_t{1} << n; bits < (std::uint64_t{2} << n); ++bits) {
      if (is_irreducible(Gf2Polynomial(bits))) ++count;
    }
    EXPECT_EQ(count, necklace_count(n)) << "degree " << n;
  }
}

TEST(Gf2, RabinBranchAgreesWithTrialDivision) {
  Gen g(11);
  for (std::size_t r = 17; r <= 22; ++r) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t bits = (std::uint64_t{1} << r) | g.uniform(0, (std::uint64_t{1} << r) - 1);
      EXPECT_EQ(is_irreducible(Gf2Polynomial(bits)), irreducible_by_trial_division(bits)) << bits;
    }
    const auto h = smallest_irreducible(r);
    std::uint64_t first = 0;
    for (std::uint64_t bits = std::uint64_t{1} << r;; ++bits) {
      if (irreducible_by_trial_division(bits)) {
        first = bits;
        break;
      }
    }
    EXPECT_EQ(h, Gf2Polynomial(first)) << "degree " << r;
  }
}

TEST(Lift, Examples) {
  EXPECT_EQ(lift_irreducible(Gf2Polynomial(0b111)), z4({1, 1, 1}));
  EXPECT_EQ(lift_irreducible(Gf2Polynomial(0b1011)), z4({3, 1, 2, 1}));
  // f(X^2) = -h(X)h(-X) = X^2 - 1 gives f = X - 1: the root is 1.
  EXPECT_EQ(lift_irreducible(Gf2Polynomial(0b11)), z4({3, 1}));
}

TEST(LiftProperty, GraeffeIdentityAndTeichmullerRoot) {
  for (std::size_t r = 1; r <= 12; ++r) {
    SCOPED_TRACE(r);
    const auto h = smallest_irreducible(r);
    const auto f = lift_irreducible(h);
    std::vector<Residue4> hx, hmx, fx2(2 * r + 1, 0);
    for (std::size_t i = 0; i <= r; ++i) {
      const int c = h.coefficient(i) ? 1 : 0;
      hx.push_back(c);
      hmx.push_back(i % 2 ? -c : c);
      fx2[2 * i] = f[i];
    }
    const auto sign = Residue4(r % 2 ? -1 : 1);
    EXPECT_EQ(Polynomial<Z4>(Z4{}, fx2), sign * (Polynomial<Z4>(Z4{}, hx) * Polynomial<Z4>(Z4{}, hmx)));
    for (std::size_t i = 0; i <= r; ++i) EXPECT_EQ(f[i].value() % 2, h.coefficient(i) ? 1 : 0);
    EXPECT_EQ(f.leading(), Residue4(1));
    // X itself is irreducible of degree 1 and has no unit root.
    if (!h.coefficient(0)) continue;
    const GaloisRing ring(h);
    EXPECT_EQ(pow(ring.generator(), (std::uint64_t{1} << r) - 1), ring.one());
  }
}

TEST(GaloisRing, ConstructForPrime) {
  const auto r3 = GaloisRing::for_prime(3);
  EXPECT_EQ(r3.degree(), 2U);
  EXPECT_EQ(r3.modulus(), z4({1, 1, 1}));
  const auto r7 = GaloisRing::for_prime(7);
  EXPECT_EQ(r7.degree(), 3U);
  EXPECT_EQ(r7.modulus(), z4({3, 1, 2, 1}));
  EXPECT_EQ(GaloisRing::for_prime(5).degree(), 4U);
  EXPECT_THROW((void)GaloisRing::for_prime(2), InvalidArgument);
}

TEST(GaloisRing, ArithmeticExamples) {
  const auto ring = GaloisRing::for_prime(3);
  const auto w = ring.generator();
  EXPECT_EQ(w * (w * w), ring.one());
  EXPECT_EQ(w * w, ring.constant(3) * w + ring.constant(3));
  EXPECT_EQ(pow(w, 0), ring.one());
  EXPECT_EQ(pow(ring.constant(3), 2), ring.one());
  EXPECT_FALSE((ring.constant(2) * w).is_unit());
  EXPECT_TRUE(w.is_unit());
  EXPECT_FALSE(ring.zero().is_unit());
  EXPECT_EQ(multiplicative_order(w, 6), 3U);
  EXPECT_EQ(multiplicative_order(ring.constant(3), 2), 2U);
  EXPECT_EQ(multiplicative_order(ring.one(), 1), 1U);
  EXPECT_THROW((void)multiplicative_order(ring.constant(2), 4), InvalidArgument);
  EXPECT_THROW((void)ring.inverse(ring.constant(2)), InvalidArgument);
}

TEST(GaloisRing, MixedRingsAreRejected) {
  const auto a = GaloisRing::for_prime(3).one();
  const auto b = GaloisRing::for_prime(7).one();
  EXPECT_THROW((void)(a + b), InvalidArgument);
  EXPECT_THROW((void)(a * b), InvalidArgument);
}

TEST(GaloisRing, ElementReducesLongInput) {
  const auto ring = GaloisRing::for_prime(3);
  const std::vector<Residue4> x2 = {0, 0, 1};
  const auto w = ring.generator();
  EXPECT_EQ(ring.element(x2), w * w);
  EXPECT_EQ(ring.from_index(2), ring.constant(2));
  EXPECT_EQ(ring.from_index(4), w);
}

TEST(GaloisRingProperty, RingAxiomsAndUnits) {
  Gen g(12);
  for (const std::uint64_t bits : {0b111ULL, 0b1011ULL, 0b100101ULL, 0b10000011ULL}) {
    const auto ring = ring_of(bits);
    const std::size_t r = ring.degree();
    const std::uint64_t group = (std::uint64_t{1} << r) * ((std::uint64_t{1} << r) - 1);
    for (int trial = 0; trial < 300; ++trial) {
      SCOPED_TRACE(trial);
      const auto a = g.element(ring), b = g.element(ring), c = g.element(ring);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      // Unit iff the residue mod 2 is coprime to the residue-field modulus.
      std::uint64_t residue = 0;
      for (std::size_t i = 0; i < r; ++i) residue |= std::uint64_t{a.coords()[i] & 1U} << i;
      const bool unit_by_gcd = residue != 0 && gcd(Gf2Polynomial(residue), Gf2Polynomial(bits)) == Gf2Polynomial(1);
      ASSERT_EQ(a.is_unit(), unit_by_gcd);
      if (a.is_unit()) {
        EXPECT_EQ(pow(a, group), ring.one());
        EXPECT_EQ(a * ring.inverse(a), ring.one());
      }
    }
  }
}

TEST(GaloisRingProperty, ResidueModulusIrreducibleAndGeneratorUnit) {
  for (const auto p : testing::odd_primes(3, 200)) {
    const auto ring = GaloisRing::for_prime(p);
    EXPECT_TRUE(is_irreducible(ring.residue_modulus())) << p;
    EXPECT_TRUE(ring.generator().is_unit()) << p;
    EXPECT_EQ(ring.degree(), ord2_mod_p(p));
  }
}

TEST(GaloisRing, MersenneQuotientBits) {
  for (const auto p : testing::odd_primes(3, 200)) {
    const auto r = ord2_mod_p(p);
    if (r >= 63) continue;
    std::uint64_t value = 0;
    for (const bool b : mersenne_quotient_bits(r, p)) value = 2 * value + (b ? 1 : 0);
    EXPECT_EQ(value, ((std::uint64_t{1} << r) - 1) / p) << p;
  }
  EXPECT_THROW((void)mersenne_quotient_bits(4, 7), InvalidArgument);
}

TEST(FindGamma, SmallestPrime) {
  const auto ring = GaloisRing::for_prime(3);
  const auto [beta, gamma] = find_gamma(ring, 3);
  EXPECT_EQ(beta, ring.generator());
  EXPECT_EQ(gamma, ring.constant(3) * ring.generator());
  EXPECT_EQ(pow(gamma, 3), ring.constant(3));
}

TEST(FindGammaProperty, PostconditionsUpTo499) {
  for (const auto p : testing::odd_primes(3, 499)) {
    SCOPED_TRACE(p);
    const auto ring = GaloisRing::for_prime(p);
    const auto [beta, gamma] = find_gamma(ring, p);
    EXPECT_NE(beta, ring.one());
    EXPECT_EQ(pow(beta, p), ring.one());
    EXPECT_EQ(pow(gamma, p), ring.constant(3));
    EXPECT_EQ(pow(gamma, 2 * p), ring.one());
  }
}

TEST(FindGammaProperty, DistinctRootsDifferByUnits) {
  for (const auto p : testing::odd_primes(3, 61)) {
    const auto ring = GaloisRing::for_prime(p);
    const PowerTable powers(find_gamma(ring, p).gamma, 2 * p);
    for (std::uint64_t a = 0; a < 2 * p; ++a) {
      for (std::uint64_t b = 0; b < 2 * p; ++b) {
        if (a % p == b % p) continue;
        ASSERT_TRUE((powers[a] - powers[b]).is_unit()) << p << ' ' << a << ' ' << b;
      }
    }
  }
}

TEST(PowerTable, EvaluationAgreesWithHorner) {
  Gen g(13);
  for (const std::uint64_t p : {3, 5, 7, 17}) {
    const auto ring = GaloisRing::for_prime(p);
    const PowerTable powers(find_gamma(ring, p).gamma, 2 * p);
    EXPECT_EQ(powers.order(), 2 * p);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = g.poly(3 * p);
      const auto v = g.uniform(0, 4 * p);
      EXPECT_EQ(powers.evaluate_at_power(a, v), evaluate(a, pow(powers.generator(), v)));
    }
  }
}

TEST(PowerTable, GeneratingPolynomialAtPlusMinusOne) {
  const auto ring = GaloisRing::for_prime(3);
  const PowerTable powers(find_gamma(ring, 3).gamma, 6);
  const auto S = generating_polynomial(generate_sequence(3));
  EXPECT_EQ(evaluate(S, powers[0]), ring.zero());
  EXPECT_EQ(evaluate(S, powers[3]), ring.constant(2));
  EXPECT_EQ(evaluate(Polynomial<Z4>{}, powers[1]), ring.zero());
}

}  // namespace
}  // namespace cyclo4
