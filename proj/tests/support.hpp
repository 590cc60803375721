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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyclo4/cyclo4.hpp"

namespace cyclo4::testing {

/// Seeded generator for property tests; every failure is reproducible from
/// the trial index reported by the test.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Residue4 residue() { return Residue4(static_cast<int>(uniform(0, 3))); }

  /// Biased towards the zero divisors 0 and 2 half of the time.
  Residue4 even_biased_residue() { return coin() ? Residue4(static_cast<int>(2 * uniform(0, 1))) : residue(); }

  std::vector<Residue4> residues(std::size_t n) {
    std::vector<Residue4> out(n);
    for (auto& x : out) x = residue();
    return out;
  }

  Polynomial<Z4> poly(std::size_t max_degree) {
    const auto n = uniform(0, max_degree + 1);
    std::vector<Residue4> c(n);
    for (auto& x : c) x = even_biased_residue();
    return Polynomial<Z4>(Z4{}, std::move(c));
  }

  Polynomial<Z4> unit_leading_poly(std::size_t max_degree) {
    auto c = residues(uniform(0, max_degree) + 1);
    c.back() = coin() ? 1 : 3;
    return Polynomial<Z4>(Z4{}, std::move(c));
  }

  GaloisRingElement element(const GaloisRing& ring) {
    const auto c = residues(ring.degree());
    return ring.element(c);
  }

  GaloisRingElement unit(const GaloisRing& ring) {
    for (;;) {
      auto x = element(ring);
      if (x.is_unit()) return x;
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// Odd primes in [lo, hi].
inline std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p) {
    if (p % 2 == 1 && is_prime(p)) out.push_back(p);
  }
  return out;
}

inline std::vector<Residue4> digits(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

inline Polynomial<Z4> z4(std::initializer_list<int> coeffs) {
  std::vector<Residue4> c(coeffs.begin(), coeffs.end());
  return Polynomial<Z4>(Z4{}, std::move(c));
}

/// c X^k.
inline Polynomial<Z4> mono(int c, std::size_t k) { return Polynomial<Z4>::monomial(Z4{}, c, k); }

struct GoldenCase {
  std::uint64_t p;
  std::string period;  // empty when only the witness is known
  std::size_t lc;
  Polynomial<Z4> witness;
  bool witness_annihilates = true;
};

/// Reference data for the six smallest tabulated primes: one period, the
/// linear complexity and a connection polynomial of that degree.
inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = [] {
    const auto sparse = [](std::initializer_list<std::pair<std::size_t, int>> terms) {
      Polynomial<Z4> out(Z4{});
      for (const auto& [k, c] : terms) out = out + mono(c, k);
      return out;
    };
    return std::vector<GoldenCase>{
        {3, "002231", 5, z4({1, 1, 1, 1, 1, 1})},
        {5, "0021323120", 10, sparse({{0, 1}, {10, 3}})},
        {7, "00212132203031", 4, z4({1, 0, 1, 1, 3})},
        {17, "", 18, sparse({{0, 1}, {1, 1}, {17, 3}, {18, 3}})},
        // Listed as 1 + 3X^31, which drops the even terms of a valid witness.
        {31, "", 31, sparse({{0, 1}, {31, 3}}), false},
        {41, "", 22, sparse({{0, 1},  {2, 2},  {3, 3},  {5, 2},  {6, 2},  {7, 3},  {8, 3},
                             {9, 3},  {10, 1}, {11, 2}, {12, 3}, {13, 1}, {14, 1}, {15, 1},
                             {16, 2}, {17, 2}, {19, 1}, {20, 2}, {22, 3}}),
         true},
    };
  }();
  return cases;
}

}  // namespace cyclo4::testing
