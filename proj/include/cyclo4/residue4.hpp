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

#include <compare>
#include <cstdint>
#include <ostream>

#include "cyclo4/error.hpp"

namespace cyclo4 {

/// An element of Z_4, always stored reduced to {0, 1, 2, 3}.
class Residue4 {
 public:
  constexpr Residue4() noexcept = default;
  constexpr Residue4(int v) noexcept  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

  [[nodiscard]] constexpr std::uint8_t value() const noexcept { return value_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return value_ == 0; }
  /// Units of Z_4 are exactly 1 and 3.
  [[nodiscard]] constexpr bool is_unit() const noexcept { return (value_ & 1U) != 0; }

  /// Inverse of a unit; 1 and 3 are self-inverse.
  [[nodiscard]] Residue4 inverse() const {
    if (!is_unit()) throw InvalidArgument("Residue4::inverse: element is not a unit");
    return *this;
  }

  constexpr Residue4& operator+=(Residue4 o) noexcept {
    value_ = static_cast<std::uint8_t>((value_ + o.value_) & 3U);
    return *this;
  }
  constexpr Residue4& operator-=(Residue4 o) noexcept {
    value_ = static_cast<std::uint8_t>((value_ + 4U - o.value_) & 3U);
    return *this;
  }
  constexpr Residue4& operator*=(Residue4 o) noexcept {
    value_ = static_cast<std::uint8_t>((value_ * o.value_) & 3U);
    return *this;
  }

  friend constexpr Residue4 operator+(Residue4 a, Residue4 b) noexcept { return a += b; }
  friend constexpr Residue4 operator-(Residue4 a, Residue4 b) noexcept { return a -= b; }
  friend constexpr Residue4 operator*(Residue4 a, Residue4 b) noexcept { return a *= b; }
  friend constexpr Residue4 operator-(Residue4 a) noexcept { return Residue4{} - a; }

  friend constexpr bool operator==(Residue4, Residue4) noexcept = default;
  friend constexpr auto operator<=>(Residue4, Residue4) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, Residue4 x) {
    return os << static_cast<int>(x.value_);
  }

 private:
  std::uint8_t value_ = 0;
};

/// Coefficient-ring context for Z_4, used to instantiate Polynomial<Z4>.
struct Z4 {
  using value_type = Residue4;

  [[nodiscard]] static constexpr Residue4 zero() noexcept { return Residue4{0}; }
  [[nodiscard]] static constexpr Residue4 one() noexcept { return Residue4{1}; }
  [[nodiscard]] static constexpr Residue4 add(Residue4 a, Residue4 b) noexcept { return a + b; }
  [[nodiscard]] static constexpr Residue4 neg(Residue4 a) noexcept { return -a; }
  [[nodiscard]] static constexpr Residue4 mul(Residue4 a, Residue4 b) noexcept { return a * b; }
  [[nodiscard]] static constexpr bool is_zero(Residue4 a) noexcept { return a.is_zero(); }
  [[nodiscard]] static constexpr bool is_unit(Residue4 a) noexcept { return a.is_unit(); }
  [[nodiscard]] static Residue4 inverse(Residue4 a) { return a.inverse(); }

  friend constexpr bool operator==(const Z4&, const Z4&) noexcept { return true; }
};

}  // namespace cyclo4
