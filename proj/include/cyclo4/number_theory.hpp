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
#include <string>
#include <vector>

#include "cyclo4/error.hpp"

namespace cyclo4 {

[[nodiscard]] constexpr bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Throws InvalidArgument unless p is an odd prime.
inline void require_odd_prime(std::uint64_t p, const char* where) {
  if (p == 2 || !is_prime(p)) {
    throw InvalidArgument(std::string(where) + ": " + std::to_string(p) + " is not an odd prime");
  }
}

[[nodiscard]] constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                                              std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

[[nodiscard]] constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                                              std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Distinct prime factors by trial division, ascending.
[[nodiscard]] inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Multiplicative order of a modulo m, or 0 when gcd(a, m) != 1.
[[nodiscard]] inline std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  a %= m;
  std::uint64_t x = a;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1) return k;
    if (x == 0) return 0;
    x = mul_mod(x, a, m);
  }
  return 0;
}

/// Order of 2 modulo an odd prime p, i.e. the extension degree r of the
/// Galois ring that contains the 2p-th roots of unity.
[[nodiscard]] inline std::uint64_t ord2_mod_p(std::uint64_t p) {
  require_odd_prime(p, "ord2_mod_p");
  std::uint64_t r = p - 1;
  for (const auto q : prime_factors(p - 1)) {
    while (r % q == 0 && pow_mod(2, r / q, p) == 1) r /= q;
  }
  return r;
}

}  // namespace cyclo4
