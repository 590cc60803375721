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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclo4/cyclotomy.hpp"
#include "cyclo4/polynomial.hpp"
#include "cyclo4/residue4.hpp"

namespace cyclo4 {

/// One period (length 2p) of the quaternary cyclotomic sequence:
/// 0 on {0} ∪ D0, 1 on D1, 2 on {p} ∪ E0, 3 on E1.
class QuaternarySequence {
 public:
  explicit QuaternarySequence(const GeneralizedCyclotomy& c) : p_(c.p()), values_(c.modulus()) {
    for (std::uint64_t u = 0; u < c.modulus(); ++u) {
      switch (c.class_of(u)) {
        case CyclotomicClass::Zero:
        case CyclotomicClass::D0: values_[u] = 0; break;
        case CyclotomicClass::D1: values_[u] = 1; break;
        case CyclotomicClass::P:
        case CyclotomicClass::E0: values_[u] = 2; break;
        case CyclotomicClass::E1: values_[u] = 3; break;
      }
    }
  }

  [[nodiscard]] std::uint64_t p() const noexcept { return p_; }
  [[nodiscard]] std::size_t period() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const Residue4> values() const noexcept { return values_; }
  [[nodiscard]] Residue4 operator[](std::size_t u) const noexcept { return values_[u % values_.size()]; }

  /// Digits "0".."3" without separators.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    out.reserve(values_.size());
    for (const auto v : values_) out.push_back(static_cast<char>('0' + v.value()));
    return out;
  }

 private:
  std::uint64_t p_;
  std::vector<Residue4> values_;
};

[[nodiscard]] inline QuaternarySequence generate_sequence(std::uint64_t p) {
  return QuaternarySequence(GeneralizedCyclotomy(p));
}

/// S(X) = s_0 + s_1 X + ... + s_(N-1) X^(N-1) for one period.
[[nodiscard]] inline Polynomial<Z4> generating_polynomial(std::span<const Residue4> period) {
  return Polynomial<Z4>(Z4{}, std::vector<Residue4>(period.begin(), period.end()));
}
[[nodiscard]] inline Polynomial<Z4> generating_polynomial(const QuaternarySequence& s) {
  return generating_polynomial(s.values());
}

/// Indicator polynomials of the four classes: S_i = Σ_{u∈D_i} X^u and
/// T_i = Σ_{u∈E_i} X^u = S_i(X^2) mod X^(2p) - 1.
struct ClassSums {
  Polynomial<Z4> s0;
  Polynomial<Z4> s1;
  Polynomial<Z4> t0;
  Polynomial<Z4> t1;
};

[[nodiscard]] inline Polynomial<Z4> indicator_polynomial(const std::vector<std::uint64_t>& members,
                                                         std::size_t n) {
  std::vector<Residue4> c(n);
  for (const auto u : members) c[u] = 1;
  return Polynomial<Z4>(Z4{}, std::move(c));
}

[[nodiscard]] inline ClassSums class_sum_polynomials(const GeneralizedCyclotomy& c) {
  const auto n = static_cast<std::size_t>(c.modulus());
  return {indicator_polynomial(c.d(0), n), indicator_polynomial(c.d(1), n),
          indicator_polynomial(c.e(0), n), indicator_polynomial(c.e(1), n)};
}

}  // namespace cyclo4
