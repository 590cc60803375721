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
#include <span>
#include <string_view>
#include <vector>

#include "cyclo4/error.hpp"
#include "cyclo4/number_theory.hpp"
#include "cyclo4/polynomial.hpp"
#include "cyclo4/residue4.hpp"
#include "cyclo4/sequence.hpp"

namespace cyclo4 {

/// A linear complexity together with a connection polynomial C (C(0) = 1,
/// deg C = lc) that annihilates the sequence.
struct LfsrResult {
  std::size_t lc = 0;
  Polynomial<Z4> connection;
};

/// True iff S(X) C(X) ≡ 0 (mod X^N - 1), N the period. C(0) must be 1.
[[nodiscard]] inline bool verify_connection(std::span<const Residue4> period,
                                            const Polynomial<Z4>& connection) {
  if (connection[0] != Residue4{1}) {
    throw InvalidArgument("verify_connection: connection polynomial must have constant term 1");
  }
  const std::size_t n = period.size();
  if (n == 0) return true;
  const auto c = connection.coefficients();
  for (std::size_t j = 0; j < n; ++j) {
    unsigned acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      acc += static_cast<unsigned>(c[i].value()) * period[(j + n * c.size() - i) % n].value();
    }
    if ((acc & 3U) != 0) return false;
  }
  return true;
}
[[nodiscard]] inline bool verify_connection(const QuaternarySequence& s, const Polynomial<Z4>& c) {
  return verify_connection(s.values(), c);
}

/// Shortest LFSR generating a finite sequence: `connection` has constant term
/// 1, degree at most `length`, and Σ_i c_i s_(j-i) = 0 for length <= j < n.
struct LfsrSynthesis {
  std::size_t length = 0;
  Polynomial<Z4> connection;
};

namespace detail {

// Multi-level shift-register synthesis over Z_4 = Z_(2^2) in the manner of
// Reeds and Sloane. Level η keeps a pair (a, b) with a(0) = 2^η and
// a S ≡ b (mod x^k). A nonzero discrepancy 2^u θ (θ a unit) at step k is
// cancelled with a stored pair of discrepancy valuation v <= u, shifted by
// x^(k - k'), choosing the stored pair with the largest k' - L'. The stored
// pair for valuation u is replaced whenever a fresh failure has a larger
// k - L. Ghost pairs (0, -2^u) seed the table; using one moves the
// discrepancy into b and sets the length to k + 1.
class Z4Synthesizer {
 public:
  static constexpr std::size_t kLevels = 2;

  explicit Z4Synthesizer(std::span<const Residue4> terms) : s_(terms) {
    for (std::size_t eta = 0; eta < kLevels; ++eta) {
      levels_[eta].a = {static_cast<std::uint8_t>(1U << eta)};
      levels_[eta].length = 0;
      stored_[eta].pair.b = {static_cast<std::uint8_t>((4U - (1U << eta)) & 3U)};
      stored_[eta].pair.length = 1;
      stored_[eta].step = 0;
      stored_[eta].theta = 1;
    }
  }

  LfsrSynthesis run() {
    for (std::size_t k = 0; k < s_.size(); ++k) step(k);
    const auto& top = levels_[0];
    std::vector<Residue4> c(top.a.begin(), top.a.end());
    return {top.length, Polynomial<Z4>(Z4{}, std::move(c))};
  }

 private:
  struct Pair {
    std::vector<std::uint8_t> a;
    std::vector<std::uint8_t> b;
    std::size_t length = 0;
  };
  struct Stored {
    Pair pair;
    std::size_t step = 0;
    std::uint8_t theta = 1;
  };

  static void trim(std::vector<std::uint8_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  static std::size_t pair_length(const Pair& p) {
    return std::max(p.a.size() == 0 ? 0 : p.a.size() - 1, p.b.size());
  }
  // p -= c x^shift q
  static void subtract_shifted(std::vector<std::uint8_t>& p, const std::vector<std::uint8_t>& q,
                               std::uint8_t c, std::size_t shift) {
    if (q.empty() || c == 0) return;
    if (p.size() < q.size() + shift) p.resize(q.size() + shift, 0);
    const unsigned neg = (4U - c) & 3U;
    for (std::size_t i = 0; i < q.size(); ++i) {
      p[i + shift] = static_cast<std::uint8_t>((p[i + shift] + neg * q[i]) & 3U);
    }
    trim(p);
  }
  std::uint8_t discrepancy(const Pair& p, std::size_t k) const {
    unsigned acc = 0;
    const std::size_t top = std::min(p.a.size(), k + 1);
    for (std::size_t i = 0; i < top; ++i) acc += static_cast<unsigned>(p.a[i]) * s_[k - i].value();
    if (k < p.b.size()) acc += 4U - p.b[k];
    return static_cast<std::uint8_t>(acc & 3U);
  }

  void step(std::size_t k) {
    std::array<Pair, kLevels> before = levels_;
    std::array<int, kLevels> valuation{};
    for (std::size_t eta = 0; eta < kLevels; ++eta) {
      const std::uint8_t d = discrepancy(levels_[eta], k);
      if (d == 0) {
        valuation[eta] = -1;
        continue;
      }
      const unsigned u = (d & 1U) ? 0U : 1U;
      const std::uint8_t theta = (d & 1U) ? d : 1;
      valuation[eta] = static_cast<int>(u);
      // Best stored pair among valuations v <= u.
      std::size_t best = 0;
      long best_merit = 0;
      for (std::size_t v = 0; v <= u; ++v) {
        const long merit = static_cast<long>(stored_[v].step) - static_cast<long>(stored_[v].pair.length);
        if (v == 0 || merit > best_merit) {
          best = v;
          best_merit = merit;
        }
      }
      const auto& q = stored_[best];
      // θ_q is a unit of Z_4, hence its own inverse.
      std::uint8_t c = static_cast<std::uint8_t>((theta * q.theta) & 3U);
      if (u > best) c = static_cast<std::uint8_t>((2U * c) & 3U);
      const std::size_t shift = k - q.step;
      subtract_shifted(levels_[eta].a, q.pair.a, c, shift);
      subtract_shifted(levels_[eta].b, q.pair.b, c, shift);
      // b only matters modulo x^(k+1).
      if (levels_[eta].b.size() > k + 1) {
        levels_[eta].b.resize(k + 1);
        trim(levels_[eta].b);
      }
      levels_[eta].length = pair_length(levels_[eta]);
    }
    for (std::size_t eta = 0; eta < kLevels; ++eta) {
      if (valuation[eta] < 0) continue;
      auto& slot = stored_[static_cast<std::size_t>(valuation[eta])];
      const long merit = static_cast<long>(k) - static_cast<long>(before[eta].length);
      const long current = static_cast<long>(slot.step) - static_cast<long>(slot.pair.length);
      if (merit > current) {
        const std::uint8_t d = discrepancy(before[eta], k);
        slot.pair = before[eta];
        slot.step = k;
        slot.theta = (d & 1U) ? d : 1;
      }
    }
  }

  std::span<const Residue4> s_;
  std::array<Pair, kLevels> levels_;
  std::array<Stored, kLevels> stored_;
};

}  // namespace detail

/// Shortest linear feedback shift register over Z_4 generating the given
/// finite sequence.
[[nodiscard]] inline LfsrSynthesis synthesize_lfsr(std::span<const Residue4> terms) {
  return detail::Z4Synthesizer(terms).run();
}

/// Linear complexity of the periodic sequence with the given period, by
/// shift-register synthesis over two tiled periods.
[[nodiscard]] inline LfsrResult reeds_sloane(std::span<const Residue4> period) {
  std::vector<Residue4> tiled(period.begin(), period.end());
  tiled.insert(tiled.end(), period.begin(), period.end());
  auto syn = synthesize_lfsr(tiled);
  if (!(syn.connection.degree() == syn.length) && !(syn.length == 0 && syn.connection.degree() == 0)) {
    throw InternalError("reeds_sloane: connection degree differs from the register length");
  }
  if (!verify_connection(period, syn.connection)) {
    throw InternalError("reeds_sloane: synthesized connection does not annihilate the sequence");
  }
  return {syn.length, std::move(syn.connection)};
}
[[nodiscard]] inline LfsrResult reeds_sloane(const QuaternarySequence& s) {
  return reeds_sloane(s.values());
}

/// Exhaustive search over connection polynomials 1 + c_1 X + ... + c_L X^L
/// (c_L != 0) for L = 0, 1, ..., degree_cap, coefficient vectors in
/// lexicographic order. Returns the first one that annihilates the sequence.
[[nodiscard]] inline LfsrResult brute_force_minimal(std::span<const Residue4> period,
                                                    std::size_t degree_cap) {
  const std::size_t n = period.size();
  std::vector<std::uint8_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = period[i].value();
  std::vector<std::uint8_t> c;
  const auto annihilates = [&](const std::vector<std::uint8_t>& coeffs) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * s[(j + n * coeffs.size() - i) % n];
      if ((acc & 3U) != 0) return false;
    }
    return true;
  };
  for (std::size_t len = 0; len <= degree_cap; ++len) {
    c.assign(len + 1, 0);
    c[0] = 1;
    if (len > 0) c[len] = 1;
    while (true) {
      if (annihilates(c)) {
        std::vector<Residue4> coeffs(c.begin(), c.end());
        return {len, Polynomial<Z4>(Z4{}, std::move(coeffs))};
      }
      // Odometer over (c_1, ..., c_len), c_len fastest, c_len in {1, 2, 3}.
      std::size_t pos = len;
      while (pos >= 1) {
        const std::uint8_t lo = pos == len ? 1 : 0;
        if (c[pos] < 3) {
          ++c[pos];
          break;
        }
        c[pos] = lo;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  throw InvalidArgument("brute_force_minimal: degree cap exceeded");
}

/// The degree cap defaults to the period, which always suffices.
[[nodiscard]] inline LfsrResult brute_force_minimal(const QuaternarySequence& s) {
  return brute_force_minimal(s.values(), s.period());
}
[[nodiscard]] inline LfsrResult brute_force_minimal(const QuaternarySequence& s, std::size_t degree_cap) {
  return brute_force_minimal(s.values(), degree_cap);
}

/// Residue classes of odd primes that decide the linear complexity.
enum class ResidueClass : std::uint8_t {
  ThreeMod8,      // p ≡ 3 (mod 8)
  FiveMod8,       // p ≡ 5 ≡ -3 (mod 8)
  OneMod16,       // p ≡ 1 (mod 16)
  FifteenMod16,   // p ≡ 15 ≡ -1 (mod 16)
  NineMod16,      // p ≡ 9 (mod 16)
  SevenMod16,     // p ≡ 7 ≡ -9 (mod 16)
};

[[nodiscard]] constexpr std::string_view to_string(ResidueClass c) noexcept {
  switch (c) {
    case ResidueClass::ThreeMod8: return "3mod8";
    case ResidueClass::FiveMod8: return "5mod8";
    case ResidueClass::OneMod16: return "1mod16";
    case ResidueClass::FifteenMod16: return "15mod16";
    case ResidueClass::NineMod16: return "9mod16";
    case ResidueClass::SevenMod16: return "7mod16";
  }
  return "?";
}

[[nodiscard]] inline ResidueClass classify_prime(std::uint64_t p) {
  require_odd_prime(p, "classify_prime");
  switch (p % 8) {
    case 3: return ResidueClass::ThreeMod8;
    case 5: return ResidueClass::FiveMod8;
    default: break;
  }
  switch (p % 16) {
    case 1: return ResidueClass::OneMod16;
    case 15: return ResidueClass::FifteenMod16;
    case 9: return ResidueClass::NineMod16;
    default: return ResidueClass::SevenMod16;
  }
}

/// Closed-form linear complexity of the period-2p sequence.
[[nodiscard]] inline std::uint64_t theorem_lc(std::uint64_t p) {
  switch (classify_prime(p)) {
    case ResidueClass::FiveMod8: return 2 * p;
    case ResidueClass::ThreeMod8: return 2 * p - 1;
    case ResidueClass::FifteenMod16: return p;
    case ResidueClass::OneMod16: return p + 1;
    case ResidueClass::SevenMod16: return (p + 1) / 2;
    case ResidueClass::NineMod16: return (p + 3) / 2;
  }
  throw InternalError("theorem_lc: unreachable");
}

}  // namespace cyclo4
