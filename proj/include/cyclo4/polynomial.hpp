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
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "cyclo4/error.hpp"

namespace cyclo4 {

/// The operations a coefficient ring context must expose so that the same
/// polynomial code serves Z_4 and GR(4^r, 4).
template <class R>
concept CoefficientRing =
    std::equality_comparable<R> && std::equality_comparable<typename R::value_type> &&
    requires(const R& ring, const typename R::value_type& a, const typename R::value_type& b) {
      { ring.zero() } -> std::convertible_to<typename R::value_type>;
      { ring.one() } -> std::convertible_to<typename R::value_type>;
      { ring.add(a, b) } -> std::convertible_to<typename R::value_type>;
      { ring.neg(a) } -> std::convertible_to<typename R::value_type>;
      { ring.mul(a, b) } -> std::convertible_to<typename R::value_type>;
      { ring.is_zero(a) } -> std::convertible_to<bool>;
      { ring.is_unit(a) } -> std::convertible_to<bool>;
      { ring.inverse(a) } -> std::convertible_to<typename R::value_type>;
    };

/// Polynomial degree. The zero polynomial has degree minus infinity, which
/// compares below every finite degree and is never confused with a number.
class Degree {
 public:
  [[nodiscard]] static constexpr Degree minus_infinity() noexcept { return Degree{}; }
  constexpr explicit Degree(std::size_t d) noexcept : finite_(true), value_(d) {}

  [[nodiscard]] constexpr bool is_finite() const noexcept { return finite_; }
  [[nodiscard]] std::size_t value() const {
    if (!finite_) throw InvalidArgument("Degree::value: degree of the zero polynomial");
    return value_;
  }

  friend constexpr bool operator==(const Degree& a, const Degree& b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const Degree& a, std::size_t d) noexcept {
    return a == Degree{d};
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, std::size_t d) noexcept {
    return a <=> Degree{d};
  }

  friend std::ostream& operator<<(std::ostream& os, const Degree& d) {
    if (!d.finite_) return os << "-inf";
    return os << d.value_;
  }

 private:
  constexpr Degree() noexcept = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

/// Dense univariate polynomial over a coefficient ring. Coefficient i belongs
/// to X^i; the top stored coefficient is always nonzero and the zero
/// polynomial has no stored coefficients.
template <CoefficientRing R>
class Polynomial {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  Polynomial()
    requires std::default_initializable<R>
  = default;

  explicit Polynomial(R ring) : ring_(std::move(ring)) {}

  Polynomial(R ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  Polynomial(std::initializer_list<value_type> coeffs)
    requires std::default_initializable<R>
      : coeffs_(coeffs) {
    normalize();
  }

  /// c * X^k.
  [[nodiscard]] static Polynomial monomial(const R& ring, value_type c, std::size_t k) {
    std::vector<value_type> coeffs(k + 1, ring.zero());
    coeffs[k] = std::move(c);
    return Polynomial(ring, std::move(coeffs));
  }
  [[nodiscard]] static Polynomial constant(const R& ring, value_type c) {
    return Polynomial(ring, std::vector<value_type>{std::move(c)});
  }

  [[nodiscard]] const R& ring() const noexcept { return ring_; }
  [[nodiscard]] std::span<const value_type> coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree{coeffs_.size() - 1};
  }

  /// Coefficient of X^i; zero beyond the stored range.
  [[nodiscard]] value_type operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ring_.zero();
  }
  [[nodiscard]] value_type leading() const {
    if (coeffs_.empty()) throw InvalidArgument("Polynomial::leading: zero polynomial");
    return coeffs_.back();
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = ring_.add(coeffs_[i], o.coeffs_[i]);
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = a.ring_.neg(c);
    return a;
  }

  /// Schoolbook convolution. The degree can drop below deg a + deg b when
  /// both leading coefficients are zero divisors.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<value_type> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.ring_.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = a.ring_.add(out[i + j], a.ring_.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return Polynomial(a.ring_, std::move(out));
  }

  friend Polynomial operator*(const value_type& c, Polynomial a) {
    for (auto& x : a.coeffs_) x = a.ring_.mul(c, x);
    a.normalize();
    return a;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.ring_.is_zero(p.coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << p.coeffs_[i] << ")";
      if (i > 0) os << "X^" << i;
    }
    return os;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  void check_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw InvalidArgument("Polynomial: operands over different rings");
  }

  R ring_{};
  std::vector<value_type> coeffs_;
};

/// Remainder of a modulo X^n - 1: the coefficient of X^i is folded onto
/// X^(i mod n).
template <CoefficientRing R>
[[nodiscard]] Polynomial<R> mod_cyclic(const Polynomial<R>& a, std::size_t n) {
  if (n == 0) throw InvalidArgument("mod_cyclic: n must be positive");
  const auto& ring = a.ring();
  std::vector<typename R::value_type> out(std::min(n, a.coefficients().size()), ring.zero());
  const auto coeffs = a.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i % n] = ring.add(out[i % n], coeffs[i]);
  return Polynomial<R>(ring, std::move(out));
}

template <CoefficientRing R>
struct DivMod {
  Polynomial<R> quotient;
  Polynomial<R> remainder;
};

/// Long division a = d * quotient + remainder with deg remainder < deg d.
/// Requires the leading coefficient of d to be a unit.
template <CoefficientRing R>
[[nodiscard]] DivMod<R> divmod(const Polynomial<R>& a, const Polynomial<R>& d) {
  if (!(a.ring() == d.ring())) throw InvalidArgument("divmod: operands over different rings");
  if (d.is_zero()) throw InvalidArgument("divmod: division by the zero polynomial");
  const auto& ring = d.ring();
  if (!ring.is_unit(d.leading())) {
    throw InvalidArgument("divmod: divisor leading coefficient is not a unit");
  }
  if (a.degree() < d.degree()) return {Polynomial<R>(ring), a};

  const auto lead_inv = ring.inverse(d.leading());
  const auto dc = d.coefficients();
  const std::size_t dn = dc.size() - 1;
  std::vector<typename R::value_type> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<typename R::value_type> quot(rem.size() - dn, ring.zero());
  for (std::size_t i = rem.size(); i-- > dn;) {
    if (ring.is_zero(rem[i])) continue;
    const auto q = ring.mul(rem[i], lead_inv);
    quot[i - dn] = q;
    const auto nq = ring.neg(q);
    for (std::size_t j = 0; j <= dn; ++j) {
      rem[i - dn + j] = ring.add(rem[i - dn + j], ring.mul(nq, dc[j]));
    }
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dn), rem.end());
  return {Polynomial<R>(ring, std::move(quot)), Polynomial<R>(ring, std::move(rem))};
}

/// Horner evaluation of a at a point of the same ring.
template <CoefficientRing R>
[[nodiscard]] typename R::value_type evaluate(const Polynomial<R>& a,
                                              const typename R::value_type& x) {
  const auto& ring = a.ring();
  auto acc = ring.zero();
  const auto coeffs = a.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), coeffs[i]);
  return acc;
}

}  // namespace cyclo4
