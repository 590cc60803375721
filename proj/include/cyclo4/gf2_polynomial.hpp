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
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo4/error.hpp"
#include "cyclo4/number_theory.hpp"
#include "cyclo4/polynomial.hpp"

namespace cyclo4 {

/// Polynomial over the two-element field, packed 64 coefficients per word.
/// Only used to pick and validate the residue-field modulus of a Galois ring.
class Gf2Polynomial {
 public:
  Gf2Polynomial() = default;

  /// Bit i of `bits` is the coefficient of X^i.
  explicit Gf2Polynomial(std::uint64_t bits) : words_{bits} { trim(); }

  [[nodiscard]] static Gf2Polynomial monomial(std::size_t k) {
    Gf2Polynomial out;
    out.words_.assign(k / 64 + 1, 0);
    out.words_[k / 64] = std::uint64_t{1} << (k % 64);
    return out;
  }

  [[nodiscard]] bool is_zero() const noexcept { return words_.empty(); }
  [[nodiscard]] Degree degree() const noexcept {
    if (words_.empty()) return Degree::minus_infinity();
    const auto top = words_.back();
    return Degree{(words_.size() - 1) * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(top))};
  }
  [[nodiscard]] bool coefficient(std::size_t i) const noexcept {
    return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }
  void flip(std::size_t i) {
    if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    trim();
  }

  friend Gf2Polynomial operator+(Gf2Polynomial a, const Gf2Polynomial& b) {
    if (b.words_.size() > a.words_.size()) a.words_.resize(b.words_.size(), 0);
    for (std::size_t i = 0; i < b.words_.size(); ++i) a.words_[i] ^= b.words_[i];
    a.trim();
    return a;
  }

  friend Gf2Polynomial operator*(const Gf2Polynomial& a, const Gf2Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Gf2Polynomial out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    const std::size_t da = a.degree().value();
    for (std::size_t i = 0; i <= da; ++i) {
      if (a.coefficient(i)) out.xor_shifted(b, i);
    }
    out.trim();
    return out;
  }

  friend Gf2Polynomial operator%(Gf2Polynomial a, const Gf2Polynomial& m) {
    if (m.is_zero()) throw InvalidArgument("Gf2Polynomial: reduction modulo zero");
    const std::size_t dm = m.degree().value();
    while (!a.is_zero() && a.degree() >= dm) {
      a.xor_shifted(m, a.degree().value() - dm);
      a.trim();
    }
    return a;
  }

  friend bool operator==(const Gf2Polynomial&, const Gf2Polynomial&) = default;

 private:
  void xor_shifted(const Gf2Polynomial& b, std::size_t shift) {
    const std::size_t ws = shift / 64;
    const std::size_t bs = shift % 64;
    const std::size_t need = b.words_.size() + ws + 1;
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < b.words_.size(); ++i) {
      words_[i + ws] ^= b.words_[i] << bs;
      if (bs != 0) words_[i + ws + 1] ^= b.words_[i] >> (64 - bs);
    }
  }
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

[[nodiscard]] inline Gf2Polynomial gcd(Gf2Polynomial a, Gf2Polynomial b) {
  while (!b.is_zero()) {
    a = a % b;
    std::swap(a, b);
  }
  return a;
}

/// Irreducibility over the two-element field. Degrees up to 16 use exhaustive
/// trial division; larger degrees use Rabin's test.
[[nodiscard]] inline bool is_irreducible(const Gf2Polynomial& h) {
  if (h.is_zero() || h.degree() == 0) return false;
  const std::size_t r = h.degree().value();
  if (r == 1) return true;
  if (r <= 16) {
    for (std::uint64_t d = 2; d < (std::uint64_t{1} << (r / 2 + 1)); ++d) {
      if ((h % Gf2Polynomial(d)).is_zero()) return false;
    }
    return true;
  }
  if (!h.coefficient(0)) return false;
  // Cheap rejection by factors of degree <= 8 before the Frobenius powers.
  static const std::vector<Gf2Polynomial> small = [] {
    std::vector<Gf2Polynomial> out;
    for (std::uint64_t bits = 2; bits < 512; ++bits) {
      const Gf2Polynomial d(bits);
      if (is_irreducible(d)) out.push_back(d);
    }
    return out;
  }();
  for (const auto& d : small) {
    if ((h % d).is_zero()) return false;
  }
  const Gf2Polynomial x = Gf2Polynomial(2);
  // frob[k] = X^(2^k) mod h
  std::vector<Gf2Polynomial> frob{x % h};
  for (std::size_t k = 1; k <= r; ++k) frob.push_back((frob.back() * frob.back()) % h);
  if (!(frob[r] == x % h)) return false;
  for (const auto q : prime_factors(r)) {
    if (!(gcd(h, frob[r / q] + x) == Gf2Polynomial(1))) return false;
  }
  return true;
}

/// The irreducible polynomial of degree r whose coefficient string, read from
/// X^r down to X^0 as a binary number, is smallest.
[[nodiscard]] inline Gf2Polynomial smallest_irreducible(std::size_t r) {
  if (r == 0) throw InvalidArgument("smallest_irreducible: degree must be positive");
  for (std::uint64_t low = 0;; ++low) {
    if (r < 64 && low >= (std::uint64_t{1} << r)) break;
    auto h = Gf2Polynomial::monomial(r) + Gf2Polynomial(low);
    if (is_irreducible(h)) return h;
  }
  throw InternalError("smallest_irreducible: no irreducible polynomial found");
}

}  // namespace cyclo4
