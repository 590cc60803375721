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

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclo4/error.hpp"
#include "cyclo4/number_theory.hpp"

namespace cyclo4 {

/// Block of the partition Z_2p = D0 | D1 | E0 | E1 | {0} | {p}.
enum class CyclotomicClass : std::uint8_t { D0, D1, E0, E1, Zero, P };

[[nodiscard]] constexpr std::string_view to_string(CyclotomicClass c) noexcept {
  switch (c) {
    case CyclotomicClass::D0: return "D0";
    case CyclotomicClass::D1: return "D1";
    case CyclotomicClass::E0: return "E0";
    case CyclotomicClass::E1: return "E1";
    case CyclotomicClass::Zero: return "Zero";
    case CyclotomicClass::P: return "P";
  }
  return "?";
}

/// Smallest odd g >= 3 that is a primitive root modulo p and modulo 2p.
[[nodiscard]] inline std::uint64_t find_common_primitive_root(std::uint64_t p) {
  require_odd_prime(p, "find_common_primitive_root");
  const auto factors = prime_factors(p - 1);
  const auto is_generator = [&](std::uint64_t g, std::uint64_t m) {
    if (pow_mod(g, p - 1, m) != 1 % m) return false;
    for (const auto q : factors) {
      if (pow_mod(g, (p - 1) / q, m) == 1 % m) return false;
    }
    return true;
  };
  for (std::uint64_t g = 3;; g += 2) {
    if (g % p != 0 && is_generator(g, p) && is_generator(g, 2 * p)) return g;
  }
}

/// The generalized cyclotomic classes modulo 2p: D0 = <g^2>, D1 = g D0 (odd
/// residues) and E_i = 2 D_i (even residues).
class GeneralizedCyclotomy {
 public:
  explicit GeneralizedCyclotomy(std::uint64_t p) : GeneralizedCyclotomy(p, find_common_primitive_root(p)) {}

  /// Classes built from a caller-chosen common primitive root g.
  GeneralizedCyclotomy(std::uint64_t p, std::uint64_t g) : p_(p), g_(g) {
    require_odd_prime(p, "GeneralizedCyclotomy");
    const std::uint64_t n = 2 * p;
    if (g % 2 == 0 || order_mod(g, p) != p - 1 || order_mod(g, n) != p - 1) {
      throw InvalidArgument("GeneralizedCyclotomy: g is not a common primitive root");
    }
    labels_.assign(n, CyclotomicClass::Zero);
    labels_[p] = CyclotomicClass::P;
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < p; ++k) {
      const auto i = static_cast<std::size_t>(k % 2);
      odd_[i].push_back(x);
      even_[i].push_back(2 * x % n);
      labels_[x] = i == 0 ? CyclotomicClass::D0 : CyclotomicClass::D1;
      labels_[2 * x % n] = i == 0 ? CyclotomicClass::E0 : CyclotomicClass::E1;
      x = x * g % n;
    }
    for (auto* v : {&odd_[0], &odd_[1], &even_[0], &even_[1]}) std::sort(v->begin(), v->end());
  }

  [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
  [[nodiscard]] std::uint64_t g() const noexcept { return g_; }
  [[nodiscard]] std::uint64_t modulus() const noexcept { return 2 * p_; }

  /// Sorted members of D_i.
  [[nodiscard]] const std::vector<std::uint64_t>& d(int i) const { return odd_.at(index(i)); }
  /// Sorted members of E_i.
  [[nodiscard]] const std::vector<std::uint64_t>& e(int i) const { return even_.at(index(i)); }
  [[nodiscard]] const std::vector<std::uint64_t>& members(CyclotomicClass c) const {
    switch (c) {
      case CyclotomicClass::D0: return odd_[0];
      case CyclotomicClass::D1: return odd_[1];
      case CyclotomicClass::E0: return even_[0];
      case CyclotomicClass::E1: return even_[1];
      default: throw InvalidArgument("GeneralizedCyclotomy::members: singleton class");
    }
  }

  [[nodiscard]] CyclotomicClass class_of(std::uint64_t v) const {
    if (v >= labels_.size()) throw InvalidArgument("class_of: residue out of range");
    return labels_[v];
  }

  /// [i, j] = |(1 + D_i) ∩ E_j|.
  [[nodiscard]] std::uint64_t cyclotomic_number(int i, int j) const {
    const auto target = index(j) == 0 ? CyclotomicClass::E0 : CyclotomicClass::E1;
    std::uint64_t count = 0;
    for (const auto u : d(i)) {
      if (labels_[(u + 1) % modulus()] == target) ++count;
    }
    return count;
  }

 private:
  static std::size_t index(int i) {
    if (i != 0 && i != 1) throw InvalidArgument("GeneralizedCyclotomy: class index must be 0 or 1");
    return static_cast<std::size_t>(i);
  }

  std::uint64_t p_;
  std::uint64_t g_;
  std::array<std::vector<std::uint64_t>, 2> odd_;
  std::array<std::vector<std::uint64_t>, 2> even_;
  std::vector<CyclotomicClass> labels_;
};

}  // namespace cyclo4
