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
#include <memory>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "cyclo4/error.hpp"
#include "cyclo4/gf2_polynomial.hpp"
#include "cyclo4/number_theory.hpp"
#include "cyclo4/polynomial.hpp"
#include "cyclo4/residue4.hpp"

namespace cyclo4 {

/// Graeffe lift of an irreducible h over the two-element field to the basic
/// irreducible f over Z_4 defined by f(X^2) = (-1)^r h(X) h(-X). Its roots
/// have odd multiplicative order 2^r - 1.
[[nodiscard]] inline Polynomial<Z4> lift_irreducible(const Gf2Polynomial& h) {
  if (!is_irreducible(h)) throw InvalidArgument("lift_irreducible: polynomial is reducible");
  const std::size_t r = h.degree().value();
  std::vector<Residue4> plus(r + 1);
  std::vector<Residue4> minus(r + 1);
  for (std::size_t i = 0; i <= r; ++i) {
    if (!h.coefficient(i)) continue;
    plus[i] = 1;
    minus[i] = (i % 2 == 0) ? 1 : 3;
  }
  const auto prod = Polynomial<Z4>(Z4{}, plus) * Polynomial<Z4>(Z4{}, minus);
  std::vector<Residue4> f(r + 1);
  const Residue4 sign = (r % 2 == 0) ? 1 : 3;
  for (std::size_t i = 0; i <= r; ++i) f[i] = sign * prod[2 * i];
  return Polynomial<Z4>(Z4{}, std::move(f));
}

class GaloisRingElement;

namespace detail {

struct GaloisRingData {
  std::size_t r = 0;
  std::vector<std::uint8_t> modulus;  // monic, length r + 1
  std::vector<std::pair<std::size_t, std::uint8_t>> reducer;  // nonzero (j, -f_j), j < r
  Gf2Polynomial residue_modulus;
};

}  // namespace detail

/// GR(4^r, 4) realized as Z_4[X]/(f) for a basic irreducible f of degree r.
/// Cheap to copy; copies share the same immutable ring description.
class GaloisRing {
 public:
  using value_type = GaloisRingElement;

  /// The ring Z_4[X]/(lift(h)).
  explicit GaloisRing(const Gf2Polynomial& h);

  /// The ring for an odd prime p: r = ord_p(2), modulus lifted from the
  /// smallest irreducible of degree r.
  [[nodiscard]] static GaloisRing for_prime(std::uint64_t p) {
    return GaloisRing(smallest_irreducible(ord2_mod_p(p)));
  }

  [[nodiscard]] std::size_t degree() const noexcept { return data_->r; }
  [[nodiscard]] Polynomial<Z4> modulus() const {
    std::vector<Residue4> c(data_->modulus.begin(), data_->modulus.end());
    return Polynomial<Z4>(Z4{}, std::move(c));
  }
  [[nodiscard]] const Gf2Polynomial& residue_modulus() const noexcept {
    return data_->residue_modulus;
  }

  [[nodiscard]] GaloisRingElement zero() const;
  [[nodiscard]] GaloisRingElement one() const;
  [[nodiscard]] GaloisRingElement constant(Residue4 c) const;
  /// Residue class of X.
  [[nodiscard]] GaloisRingElement generator() const;
  /// Element with the given coordinates (coefficients of 1, X, ..., X^(r-1)).
  [[nodiscard]] GaloisRingElement element(std::span<const Residue4> coords) const;
  /// Element whose coordinates are the base-4 digits of `index`, least
  /// significant digit first.
  [[nodiscard]] GaloisRingElement from_index(std::uint64_t index) const;

  // Coefficient-ring interface for Polynomial<GaloisRing>.
  [[nodiscard]] GaloisRingElement add(const GaloisRingElement& a, const GaloisRingElement& b) const;
  [[nodiscard]] GaloisRingElement neg(const GaloisRingElement& a) const;
  [[nodiscard]] GaloisRingElement mul(const GaloisRingElement& a, const GaloisRingElement& b) const;
  [[nodiscard]] bool is_zero(const GaloisRingElement& a) const;
  [[nodiscard]] bool is_unit(const GaloisRingElement& a) const;
  [[nodiscard]] GaloisRingElement inverse(const GaloisRingElement& a) const;

  friend bool operator==(const GaloisRing& a, const GaloisRing& b) noexcept {
    return a.data_ == b.data_ || a.data_->modulus == b.data_->modulus;
  }

 private:
  friend class GaloisRingElement;
  explicit GaloisRing(std::shared_ptr<const detail::GaloisRingData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::GaloisRingData> data_;
};

/// A residue of GR(4^r, 4), always reduced modulo the ring's modulus.
class GaloisRingElement {
 public:
  [[nodiscard]] GaloisRing ring() const { return GaloisRing(ring_); }
  [[nodiscard]] std::span<const std::uint8_t> coords() const noexcept { return coords_; }

  [[nodiscard]] bool is_zero() const noexcept {
    for (const auto c : coords_) {
      if (c != 0) return false;
    }
    return true;
  }
  /// Units are exactly the elements with nonzero reduction mod 2.
  [[nodiscard]] bool is_unit() const noexcept {
    for (const auto c : coords_) {
      if ((c & 1U) != 0) return true;
    }
    return false;
  }
  /// True when the element is the image of a constant of Z_4.
  [[nodiscard]] bool is_constant() const noexcept {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
      if (coords_[i] != 0) return false;
    }
    return true;
  }
  [[nodiscard]] Residue4 constant_term() const noexcept { return Residue4{coords_[0]}; }

  GaloisRingElement& operator+=(const GaloisRingElement& o) {
    check_ring(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      coords_[i] = static_cast<std::uint8_t>((coords_[i] + o.coords_[i]) & 3U);
    }
    return *this;
  }
  GaloisRingElement& operator-=(const GaloisRingElement& o) {
    check_ring(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      coords_[i] = static_cast<std::uint8_t>((coords_[i] + 4U - o.coords_[i]) & 3U);
    }
    return *this;
  }
  friend GaloisRingElement operator+(GaloisRingElement a, const GaloisRingElement& b) { return a += b; }
  friend GaloisRingElement operator-(GaloisRingElement a, const GaloisRingElement& b) { return a -= b; }
  friend GaloisRingElement operator-(GaloisRingElement a) {
    for (auto& c : a.coords_) c = static_cast<std::uint8_t>((4U - c) & 3U);
    return a;
  }
  friend GaloisRingElement operator*(Residue4 c, GaloisRingElement a) {
    for (auto& x : a.coords_) x = static_cast<std::uint8_t>((x * c.value()) & 3U);
    return a;
  }

  friend GaloisRingElement operator*(const GaloisRingElement& a, const GaloisRingElement& b) {
    a.check_ring(b);
    const std::size_t r = a.coords_.size();
    // Byte arithmetic wraps mod 256, which is exact mod 4.
    std::vector<std::uint8_t> acc(2 * r - 1, 0);
    for (std::size_t i = 0; i < r; ++i) {
      const std::uint8_t ai = a.coords_[i];
      if (ai == 0) continue;
      std::uint8_t* dst = acc.data() + i;
      const std::uint8_t* src = b.coords_.data();
      for (std::size_t j = 0; j < r; ++j) dst[j] = static_cast<std::uint8_t>(dst[j] + ai * src[j]);
    }
    // X^r = -(f_0 + ... + f_{r-1} X^{r-1}).
    for (std::size_t k = 2 * r - 1; k-- > r;) {
      const std::uint8_t c = acc[k] & 3U;
      if (c == 0) continue;
      for (const auto& [j, neg_f] : a.ring_->reducer) {
        acc[k - r + j] = static_cast<std::uint8_t>(acc[k - r + j] + c * neg_f);
      }
    }
    GaloisRingElement out(a.ring_);
    for (std::size_t i = 0; i < r; ++i) out.coords_[i] = static_cast<std::uint8_t>(acc[i] & 3U);
    return out;
  }
  GaloisRingElement& operator*=(const GaloisRingElement& o) { return *this = *this * o; }

  friend bool operator==(const GaloisRingElement& a, const GaloisRingElement& b) {
    return a.coords_ == b.coords_ && a.ring() == b.ring();
  }

  friend std::ostream& operator<<(std::ostream& os, const GaloisRingElement& x) {
    os << "[";
    for (std::size_t i = 0; i < x.coords_.size(); ++i) {
      if (i > 0) os << ",";
      os << static_cast<int>(x.coords_[i]);
    }
    return os << "]";
  }

 private:
  friend class GaloisRing;
  explicit GaloisRingElement(std::shared_ptr<const detail::GaloisRingData> ring)
      : ring_(std::move(ring)), coords_(ring_->r, 0) {}

  void check_ring(const GaloisRingElement& o) const {
    if (ring_ != o.ring_ && ring_->modulus != o.ring_->modulus) {
      throw InvalidArgument("GaloisRingElement: operands belong to different rings");
    }
  }

  std::shared_ptr<const detail::GaloisRingData> ring_;
  std::vector<std::uint8_t> coords_;
};

inline GaloisRing::GaloisRing(const Gf2Polynomial& h) {
  auto data = std::make_shared<detail::GaloisRingData>();
  const auto f = lift_irreducible(h);
  data->r = h.degree().value();
  data->residue_modulus = h;
  for (const auto c : f.coefficients()) data->modulus.push_back(c.value());
  for (std::size_t j = 0; j < data->r; ++j) {
    if (data->modulus[j] != 0) data->reducer.emplace_back(j, static_cast<std::uint8_t>(4 - data->modulus[j]));
  }
  data_ = std::move(data);
}

inline GaloisRingElement GaloisRing::zero() const { return GaloisRingElement(data_); }
inline GaloisRingElement GaloisRing::one() const { return constant(1); }
inline GaloisRingElement GaloisRing::constant(Residue4 c) const {
  GaloisRingElement out(data_);
  out.coords_[0] = c.value();
  return out;
}
inline GaloisRingElement GaloisRing::generator() const {
  if (data_->r == 1) return constant(Residue4{0} - Residue4{data_->modulus[0]});
  GaloisRingElement out(data_);
  out.coords_[1] = 1;
  return out;
}
inline GaloisRingElement GaloisRing::element(std::span<const Residue4> coords) const {
  if (coords.size() > data_->r) {
    // Reduce a longer representative modulo f.
    auto rep = Polynomial<Z4>(Z4{}, std::vector<Residue4>(coords.begin(), coords.end()));
    const auto rem = divmod(rep, modulus()).remainder;
    return element(rem.coefficients());
  }
  GaloisRingElement out(data_);
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords_[i] = coords[i].value();
  return out;
}
inline GaloisRingElement GaloisRing::from_index(std::uint64_t index) const {
  GaloisRingElement out(data_);
  for (std::size_t i = 0; i < data_->r && index > 0; ++i, index >>= 2U) {
    out.coords_[i] = static_cast<std::uint8_t>(index & 3U);
  }
  if (index != 0) throw InvalidArgument("GaloisRing::from_index: index out of range");
  return out;
}

inline GaloisRingElement GaloisRing::add(const GaloisRingElement& a, const GaloisRingElement& b) const {
  return a + b;
}
inline GaloisRingElement GaloisRing::neg(const GaloisRingElement& a) const { return -a; }
inline GaloisRingElement GaloisRing::mul(const GaloisRingElement& a, const GaloisRingElement& b) const {
  return a * b;
}
inline bool GaloisRing::is_zero(const GaloisRingElement& a) const { return a.is_zero(); }
inline bool GaloisRing::is_unit(const GaloisRingElement& a) const { return a.is_unit(); }

/// Exponent given as binary digits, most significant first.
[[nodiscard]] inline GaloisRingElement pow_bits(const GaloisRingElement& x,
                                                const std::vector<bool>& bits) {
  auto acc = x.ring().one();
  for (const bool b : bits) {
    acc = acc * acc;
    if (b) acc = acc * x;
  }
  return acc;
}

/// Square-and-multiply.
[[nodiscard]] inline GaloisRingElement pow(GaloisRingElement x, std::uint64_t e) {
  auto acc = x.ring().one();
  while (e > 0) {
    if (e & 1U) acc = acc * x;
    e >>= 1U;
    if (e > 0) x = x * x;
  }
  return acc;
}

/// Inverse of a unit as x^(|GR*| - 1) with |GR*| = 2^r (2^r - 1).
inline GaloisRingElement GaloisRing::inverse(const GaloisRingElement& a) const {
  if (!a.is_unit()) throw InvalidArgument("GaloisRing::inverse: element is not a unit");
  const std::size_t r = data_->r;
  // 2^(2r) - 2^r - 1 in binary: (r - 1) ones, a zero, r ones.
  std::vector<bool> bits(r - 1, true);
  bits.push_back(false);
  bits.insert(bits.end(), r, true);
  return pow_bits(a, bits);
}

/// Least k >= 1 with x^k = 1, given a multiple `bound` of the order.
[[nodiscard]] inline std::uint64_t multiplicative_order(const GaloisRingElement& x,
                                                        std::uint64_t bound) {
  if (!x.is_unit()) throw InvalidArgument("multiplicative_order: element is not a unit");
  if (bound == 0) throw InvalidArgument("multiplicative_order: bound must be positive");
  const auto one = x.ring().one();
  if (!(pow(x, bound) == one)) {
    throw InvalidArgument("multiplicative_order: order does not divide the bound");
  }
  std::uint64_t k = bound;
  for (const auto q : prime_factors(bound)) {
    while (k % q == 0 && pow(x, k / q) == one) k /= q;
  }
  return k;
}

/// Binary digits (most significant first) of (2^r - 1) / p, by long division.
[[nodiscard]] inline std::vector<bool> mersenne_quotient_bits(std::size_t r, std::uint64_t p) {
  std::vector<bool> bits;
  std::uint64_t rem = 0;
  for (std::size_t i = 0; i < r; ++i) {
    rem = 2 * rem + 1;
    const bool q = rem >= p;
    if (q) rem -= p;
    if (q || !bits.empty()) bits.push_back(q);
  }
  if (rem != 0) throw InvalidArgument("mersenne_quotient_bits: p does not divide 2^r - 1");
  return bits;
}

struct GammaPair {
  GaloisRingElement beta;   // order p
  GaloisRingElement gamma;  // 3 * beta, order 2p
};

/// Deterministic search for an element beta of order p and gamma = 3 beta of
/// order 2p. Candidates are X, X + 1, X + 2, ... in base-4 index order; each
/// is raised to 2^r (2^r - 1) / p and the first result other than 1 is kept.
[[nodiscard]] inline GammaPair find_gamma(const GaloisRing& ring, std::uint64_t p) {
  require_odd_prime(p, "find_gamma");
  const std::size_t r = ring.degree();
  const auto exponent = mersenne_quotient_bits(r, p);
  const auto one = ring.one();
  const auto three = ring.constant(3);
  const std::uint64_t first = r == 1 ? 2 : 4;
  const std::uint64_t last = r >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * r));
  for (std::uint64_t idx = first; idx < last; ++idx) {
    const auto u = ring.from_index(idx);
    if (!u.is_unit()) continue;
    auto beta = pow_bits(u, exponent);
    for (std::size_t i = 0; i < r; ++i) beta = beta * beta;
    if (beta == one) continue;
    if (!(pow(beta, p) == one)) throw InternalError("find_gamma: beta^p != 1");
    auto gamma = three * beta;
    if (!(pow(gamma, p) == three) || !(pow(gamma, 2 * p) == one)) {
      throw InternalError("find_gamma: gamma does not have order 2p");
    }
    return {std::move(beta), std::move(gamma)};
  }
  throw InternalError("find_gamma: candidate search exhausted");
}

/// Evaluate a polynomial over Z_4 at a Galois ring point (Horner, with the
/// canonical embedding of Z_4 as constants).
[[nodiscard]] inline GaloisRingElement evaluate(const Polynomial<Z4>& a,
                                                const GaloisRingElement& x) {
  const auto ring = x.ring();
  auto acc = ring.zero();
  const auto coeffs = a.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + ring.constant(coeffs[i]);
  return acc;
}

/// The powers gamma^0, ..., gamma^(n-1) of an element of order n, computed
/// once with one multiplication each.
class PowerTable {
 public:
  PowerTable(const GaloisRingElement& gamma, std::size_t order) {
    if (order == 0) throw InvalidArgument("PowerTable: order must be positive");
    powers_.reserve(order);
    powers_.push_back(gamma.ring().one());
    for (std::size_t v = 1; v < order; ++v) powers_.push_back(powers_.back() * gamma);
    if (!(powers_.back() * gamma == powers_.front())) {
      throw InvalidArgument("PowerTable: element order does not divide the table size");
    }
  }

  [[nodiscard]] std::size_t order() const noexcept { return powers_.size(); }
  [[nodiscard]] const GaloisRingElement& generator() const noexcept {
    return powers_.size() > 1 ? powers_[1] : powers_[0];
  }
  /// gamma^(k mod n)
  [[nodiscard]] const GaloisRingElement& operator[](std::uint64_t k) const noexcept {
    return powers_[k % powers_.size()];
  }

  /// a(gamma^v) using cached powers: sum of a_i gamma^(i v mod n).
  [[nodiscard]] GaloisRingElement evaluate_at_power(const Polynomial<Z4>& a, std::uint64_t v) const {
    auto acc = powers_[0].ring().zero();
    const auto coeffs = a.coefficients();
    const std::uint64_t n = powers_.size();
    std::uint64_t e = 0;
    const std::uint64_t step = v % n;
    for (std::size_t i = 0; i < coeffs.size(); ++i, e = (e + step) % n) {
      switch (coeffs[i].value()) {
        case 0: break;
        case 1: acc += powers_[e]; break;
        case 2: acc += powers_[e]; acc += powers_[e]; break;
        default: acc -= powers_[e]; break;
      }
    }
    return acc;
  }

 private:
  std::vector<GaloisRingElement> powers_;
};

}  // namespace cyclo4
