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
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo4/cyclotomy.hpp"
#include "cyclo4/error.hpp"
#include "cyclo4/galois_ring.hpp"
#include "cyclo4/linear_complexity.hpp"
#include "cyclo4/number_theory.hpp"
#include "cyclo4/polynomial.hpp"
#include "cyclo4/residue4.hpp"
#include "cyclo4/sequence.hpp"

namespace cyclo4 {

enum class CheckStatus : std::uint8_t { Pass, Fail, Skip };

[[nodiscard]] constexpr std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct LemmaReport {
  std::uint64_t p = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const noexcept {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
  }
};

/// One line per check: `<id> <PASS|FAIL|SKIP> <detail>`.
inline std::ostream& operator<<(std::ostream& os, const LemmaReport& report) {
  for (const auto& c : report.checks) os << c.id << ' ' << to_string(c.status) << ' ' << c.detail << '\n';
  return os;
}

/// Every check identifier full_report knows, in report order.
inline const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "lemma3", "lemma5", "identity", "units", "lemma6", "lemma7", "lemma4", "lemma8",
      "lemma1", "lemma2", "factorization", "lemma9", "remark", "theorem"};
  return ids;
}

/// An element of order 2p, possibly replaced by gamma^v (v the smallest
/// element of D1) so that S0(gamma) = Σ_{u∈D0} gamma^u is a unit.
struct NormalizedGamma {
  GaloisRingElement gamma;
  std::uint64_t exponent = 1;  // gamma = original^exponent
  [[nodiscard]] bool replaced() const noexcept { return exponent != 1; }
};

/// Σ_{u ∈ members} gamma^u.
[[nodiscard]] inline GaloisRingElement class_sum(const PowerTable& powers,
                                                 const std::vector<std::uint64_t>& members) {
  auto acc = powers[0].ring().zero();
  for (const auto u : members) acc += powers[u];
  return acc;
}

[[nodiscard]] inline NormalizedGamma normalize_gamma(const GeneralizedCyclotomy& c,
                                                     const GaloisRingElement& gamma) {
  const PowerTable powers(gamma, c.modulus());
  if (class_sum(powers, c.d(0)).is_unit()) return {gamma, 1};
  const std::uint64_t v = c.d(1).front();
  const auto swapped = powers[v];
  if (!class_sum(PowerTable(swapped, c.modulus()), c.d(0)).is_unit()) {
    throw InternalError("normalize_gamma: neither S0(gamma) nor S1(gamma) is a unit");
  }
  return {swapped, v};
}

namespace detail {

[[nodiscard]] inline bool pm_one_mod8(std::uint64_t p) noexcept { return p % 8 == 1 || p % 8 == 7; }

[[nodiscard]] inline std::vector<std::uint64_t> sorted_image(const std::vector<std::uint64_t>& set,
                                                             const std::function<std::uint64_t(std::uint64_t)>& f) {
  std::vector<std::uint64_t> out;
  out.reserve(set.size());
  for (const auto u : set) out.push_back(f(u));
  std::sort(out.begin(), out.end());
  return out;
}

class Tally {
 public:
  explicit Tally(std::string id) : id_(std::move(id)) {}
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    if (!ok) ++failed_;
  }
  [[nodiscard]] CheckResult result(const std::string& summary) const {
    if (failed_ == 0) return {id_, CheckStatus::Pass, summary + " (" + std::to_string(total_) + " assertions)"};
    return {id_, CheckStatus::Fail,
            std::to_string(failed_) + "/" + std::to_string(total_) + " failed; first: " + first_failure_};
  }

 private:
  std::string id_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

inline std::string str(const GaloisRingElement& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

[[nodiscard]] inline Polynomial<GaloisRing> embed(const Polynomial<Z4>& a, const GaloisRing& ring) {
  std::vector<GaloisRingElement> coeffs;
  for (const auto c : a.coefficients()) coeffs.push_back(ring.constant(c));
  return Polynomial<GaloisRing>(ring, std::move(coeffs));
}

/// Π_{v ∈ members} (X - gamma^v) in GR[X].
[[nodiscard]] inline Polynomial<GaloisRing> root_product(const PowerTable& powers,
                                                         const std::vector<std::uint64_t>& members) {
  const auto ring = powers[0].ring();
  Polynomial<GaloisRing> acc = Polynomial<GaloisRing>::constant(ring, ring.one());
  for (const auto v : members) {
    acc = acc * Polynomial<GaloisRing>(ring, {-powers[v], ring.one()});
  }
  return acc;
}

[[nodiscard]] inline Polynomial<Z4> x_pow_plus(std::size_t k, Residue4 c) {
  return Polynomial<Z4>::monomial(Z4{}, 1, k) + Polynomial<Z4>::constant(Z4{}, c);
}

}  // namespace detail

/// Class relations under multiplication and translation by p.
[[nodiscard]] inline CheckResult check_lemma3(const GeneralizedCyclotomy& c) {
  using detail::sorted_image;
  detail::Tally t("lemma3");
  const std::uint64_t p = c.p();
  const std::uint64_t n = c.modulus();
  const bool qr2 = detail::pm_one_mod8(p);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int ij = (i + j) % 2;
      const int ij1 = (i + j + 1) % 2;
      for (const auto v : c.d(i)) {
        const auto mul = [&](std::uint64_t u) { return v * u % n; };
        t.expect(sorted_image(c.d(j), mul) == c.d(ij),
                 "(I) v=" + std::to_string(v) + " in D" + std::to_string(i) + ": vD" + std::to_string(j));
        t.expect(sorted_image(c.e(j), mul) == c.e(ij),
                 "(I) v=" + std::to_string(v) + " in D" + std::to_string(i) + ": vE" + std::to_string(j));
      }
      for (const auto v : c.e(i)) {
        const auto mul = [&](std::uint64_t u) { return v * u % n; };
        t.expect(sorted_image(c.d(j), mul) == c.e(ij),
                 "(II) v=" + std::to_string(v) + " in E" + std::to_string(i) + ": vD" + std::to_string(j));
        t.expect(sorted_image(c.e(j), mul) == c.e(qr2 ? ij : ij1),
                 "(II) v=" + std::to_string(v) + " in E" + std::to_string(i) + ": vE" + std::to_string(j));
      }
    }
    const auto shift = [&](std::uint64_t v) { return (v + p) % n; };
    const int k = qr2 ? i : (i + 1) % 2;
    t.expect(sorted_image(c.e(i), shift) == c.d(k), "(III) E" + std::to_string(i) + " + p");
    t.expect(sorted_image(c.d(i), shift) == c.e(k), "(IV) D" + std::to_string(i) + " + p");
    if (qr2) {
      std::vector<std::uint64_t> rebuilt;
      for (const auto u : c.d(i)) rebuilt.push_back(u < p ? u + p : u - p);
      std::sort(rebuilt.begin(), rebuilt.end());
      t.expect(rebuilt == c.e(i), "(V) E" + std::to_string(i));
    }
  }
  return t.result(qr2 ? "parts I-V hold" : "parts I-IV hold, V not applicable");
}

/// Closed forms of the cyclotomic numbers [0,0] and [0,1].
[[nodiscard]] inline CheckResult check_lemma5(const GeneralizedCyclotomy& c) {
  const std::uint64_t p = c.p();
  std::uint64_t e00 = 0;
  std::uint64_t e01 = 0;
  switch (p % 8) {
    case 1: e00 = (p - 5) / 4; e01 = (p - 1) / 4; break;
    case 7: e00 = (p - 3) / 4; e01 = (p + 1) / 4; break;
    case 5: e00 = (p - 1) / 4; e01 = (p - 5) / 4; break;
    default: e00 = (p + 1) / 4; e01 = (p - 3) / 4; break;
  }
  const auto n00 = c.cyclotomic_number(0, 0);
  const auto n01 = c.cyclotomic_number(0, 1);
  detail::Tally t("lemma5");
  t.expect(n00 == e00, "[0,0]=" + std::to_string(n00) + " expected " + std::to_string(e00));
  t.expect(n01 == e01, "[0,1]=" + std::to_string(n01) + " expected " + std::to_string(e01));
  return t.result("[0,0]=" + std::to_string(n00) + " [0,1]=" + std::to_string(n01));
}

/// S(X) = 2X^p + S1 + 2T0 + 3T1, T_i(gamma) = S_i(gamma^2), and
/// S0(gamma) + S1(gamma) = 1.
[[nodiscard]] inline CheckResult check_identities(const GeneralizedCyclotomy& c, const PowerTable& powers,
                                                  const QuaternarySequence& s) {
  detail::Tally t("identity");
  const auto sums = class_sum_polynomials(c);
  const auto assembled = Polynomial<Z4>::monomial(Z4{}, 2, c.p()) + sums.s1 + Residue4{2} * sums.t0 +
                         Residue4{3} * sums.t1;
  t.expect(assembled == generating_polynomial(s), "S(X) != 2X^p + S1 + 2T0 + 3T1");
  const auto s0 = class_sum(powers, c.d(0));
  const auto s1 = class_sum(powers, c.d(1));
  t.expect(s0 + s1 == powers[0], "S0(gamma) + S1(gamma) != 1");
  const PowerTable squared(powers[2], c.modulus());
  t.expect(class_sum(powers, c.e(0)) == class_sum(squared, c.d(0)), "T0(gamma) != S0(gamma^2)");
  t.expect(class_sum(powers, c.e(1)) == class_sum(squared, c.d(1)), "T1(gamma) != S1(gamma^2)");
  return t.result("generating polynomial and S0 + S1 = 1");
}

/// gamma^a - gamma^b is a unit whenever a ≢ b (mod p).
[[nodiscard]] inline CheckResult check_unit_differences(const PowerTable& powers, std::uint64_t p) {
  detail::Tally t("units");
  const std::uint64_t n = powers.order();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      if (a % p == b % p) continue;
      t.expect((powers[a] - powers[b]).is_unit(),
               "gamma^" + std::to_string(a) + " - gamma^" + std::to_string(b) + " is not a unit");
    }
  }
  return t.result("distinct roots differ by units");
}

/// Constant c in (S0(gamma))^2 = S0(gamma) + c, reduced mod 4. By p mod 8:
/// 1, 5 -> (p-1)/4; 7 -> (p+1)/4; 3 -> -(p+1)/4.
[[nodiscard]] inline Residue4 lemma6_constant(std::uint64_t p) {
  require_odd_prime(p, "lemma6_constant");
  switch (p % 8) {
    case 1:
    case 5: return Residue4(static_cast<int>(((p - 1) / 4) % 4));
    case 7: return Residue4(static_cast<int>(((p + 1) / 4) % 4));
    default: return -Residue4(static_cast<int>(((p + 1) / 4) % 4));
  }
}

[[nodiscard]] inline CheckResult check_lemma6(const GeneralizedCyclotomy& c, const PowerTable& powers) {
  const auto k = lemma6_constant(c.p());
  const auto s0 = class_sum(powers, c.d(0));
  const auto constant = powers[0].ring().constant(k);
  const std::string text = "S0^2 = S0 + " + std::to_string(k.value());
  detail::Tally t("lemma6");
  t.expect(s0 * s0 == s0 + constant, "not " + text);
  return t.result(text);
}

/// Values of S0(gamma) for a normalized gamma, by p mod 16.
[[nodiscard]] inline CheckResult check_lemma7(const GeneralizedCyclotomy& c, const PowerTable& powers) {
  const std::uint64_t p = c.p();
  const auto ring = powers[0].ring();
  const auto s0 = class_sum(powers, c.d(0));
  const auto rho_equation = [&](const GaloisRingElement& rho) {
    return (rho * rho + ring.constant(3) * rho + ring.constant(3)).is_zero();
  };
  detail::Tally t("lemma7");
  t.expect(s0.is_unit(), "S0(gamma) is not a unit");
  std::string summary;
  switch (p % 16) {
    case 1:
    case 15:
      t.expect(s0 == ring.one(), "S0 = " + detail::str(s0) + ", expected 1");
      summary = "S0 = 1";
      break;
    case 9:
    case 7:
      t.expect(s0 == ring.constant(3), "S0 = " + detail::str(s0) + ", expected 3");
      summary = "S0 = 3";
      break;
    case 5:
    case 11:
      t.expect(rho_equation(s0), "S0 does not satisfy rho^2 + 3rho + 3 = 0");
      summary = "S0 = rho, rho^2 + 3rho + 3 = 0";
      break;
    default:
      t.expect(rho_equation(s0 - ring.constant(2)), "S0 - 2 does not satisfy rho^2 + 3rho + 3 = 0");
      summary = "S0 = 2 + rho, rho^2 + 3rho + 3 = 0";
      break;
  }
  return t.result(summary);
}

/// S(gamma^v) for every v: the closed forms in terms of S0(gamma), the values
/// at v = 0 and v = p, unit-ness for p ≡ ±3 (mod 8), and the 0/2 pattern for
/// p ≡ ±1 (mod 8). Returns the lemma4 and lemma8 entries.
[[nodiscard]] inline std::vector<CheckResult> check_lemma4_lemma8(const GeneralizedCyclotomy& c,
                                                                  const PowerTable& powers,
                                                                  const QuaternarySequence& s) {
  const std::uint64_t p = c.p();
  const std::uint64_t n = c.modulus();
  const auto ring = powers[0].ring();
  const auto S = generating_polynomial(s);
  const auto s0 = class_sum(powers, c.d(0));
  const auto one = ring.one();
  const auto two = ring.constant(2);
  const bool qr2 = detail::pm_one_mod8(p);

  detail::Tally t4("lemma4");
  detail::Tally t8("lemma8");
  for (std::uint64_t v = 0; v < n; ++v) {
    const auto value = powers.evaluate_at_power(S, v);
    const auto cls = c.class_of(v);
    const std::string where = "v=" + std::to_string(v) + " (" + std::string(to_string(cls)) + ")";
    if (cls == CyclotomicClass::Zero) {
      t8.expect(value == ring.constant(static_cast<int>((p + 1) % 4)), "(I) S(1) != p+1 at " + where);
      continue;
    }
    if (cls == CyclotomicClass::P) {
      t8.expect(value == two, "(I) S(-1) != 2 at " + where);
      continue;
    }
    GaloisRingElement expected = ring.zero();
    if (!qr2) {
      switch (cls) {
        case CyclotomicClass::D0: expected = one - two * s0; break;
        case CyclotomicClass::D1: expected = two * s0 - one; break;
        default: expected = ring.constant(3); break;
      }
      t8.expect(value.is_unit(), "(II) S(gamma^v) not a unit at " + where);
    } else {
      switch (cls) {
        case CyclotomicClass::D0:
        case CyclotomicClass::D1: expected = ring.zero(); break;
        case CyclotomicClass::E0: expected = two - two * s0; break;
        default: expected = two * s0; break;
      }
      const auto want = cls == CyclotomicClass::E1 ? two : ring.zero();
      t8.expect(value == want, "(III) S(gamma^v) = " + detail::str(value) + " at " + where);
    }
    t4.expect(value == expected, "S(gamma^v) = " + detail::str(value) + " expected " + detail::str(expected) +
                                     " at " + where);
  }
  return {t4.result(qr2 ? "table for p = +-1 mod 8" : "table for p = +-3 mod 8"),
          t8.result(qr2 ? "S(1)=p+1, S(-1)=2, 0 on D0,D1,E0 and 2 on E1"
                        : "S(1)=p+1, S(-1)=2, units on D0,D1,E0,E1")};
}

/// Expansion of Γ_j = Π_{v∈D_j}(X - gamma^v) and Λ_j = Π_{v∈E_j}(X - gamma^v):
/// (X+1)Γ0Γ1 = X^p + 1, (X-1)Λ0Λ1 = X^p - 1, and for p ≡ ±1 (mod 8) all
/// coefficients lie in Z_4. Returns the factorization and lemma9 entries.
[[nodiscard]] inline std::vector<CheckResult> check_factorizations(const GeneralizedCyclotomy& c,
                                                                   const PowerTable& powers,
                                                                   std::uint64_t expansion_cap) {
  const std::uint64_t p = c.p();
  if (p > expansion_cap) {
    const std::string why = "p=" + std::to_string(p) + " exceeds expansion cap " + std::to_string(expansion_cap);
    return {{"factorization", CheckStatus::Skip, why}, {"lemma9", CheckStatus::Skip, why}};
  }
  const auto ring = powers[0].ring();
  const auto gamma0 = detail::root_product(powers, c.d(0));
  const auto gamma1 = detail::root_product(powers, c.d(1));
  const auto lambda0 = detail::root_product(powers, c.e(0));
  const auto lambda1 = detail::root_product(powers, c.e(1));
  const auto linear = [&](Residue4 c0) { return detail::embed(detail::x_pow_plus(1, c0), ring); };

  detail::Tally tf("factorization");
  tf.expect(linear(1) * gamma0 * gamma1 == detail::embed(detail::x_pow_plus(p, 1), ring),
            "(X+1) Gamma0 Gamma1 != X^p + 1");
  tf.expect(linear(3) * lambda0 * lambda1 == detail::embed(detail::x_pow_plus(p, 3), ring),
            "(X-1) Lambda0 Lambda1 != X^p - 1");
  std::vector<CheckResult> out{tf.result("X^p+1 and X^p-1 split over the classes")};

  if (!detail::pm_one_mod8(p)) {
    out.push_back({"lemma9", CheckStatus::Skip, "integrality only claimed for p = +-1 mod 8"});
    return out;
  }
  detail::Tally t9("lemma9");
  const std::pair<const char*, const Polynomial<GaloisRing>*> named[] = {
      {"Gamma0", &gamma0}, {"Gamma1", &gamma1}, {"Lambda0", &lambda0}, {"Lambda1", &lambda1}};
  for (const auto& [name, poly] : named) {
    const auto coeffs = poly->coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      t9.expect(coeffs[i].is_constant(), std::string(name) + " coefficient of X^" + std::to_string(i) +
                                             " = " + detail::str(coeffs[i]) + " not in Z4");
    }
  }
  out.push_back(t9.result("Gamma_j and Lambda_j have Z4 coefficients"));
  return out;
}

/// Root division in GR[X]: each root of S peels off a linear factor, two roots
/// with unit difference peel off both, and vanishing on a whole class makes
/// the class product a divisor. Returns the lemma1 and lemma2 entries.
[[nodiscard]] inline std::vector<CheckResult> check_root_division(const GeneralizedCyclotomy& c,
                                                                  const PowerTable& powers,
                                                                  const QuaternarySequence& s,
                                                                  std::uint64_t expansion_cap) {
  const std::uint64_t p = c.p();
  if (p > expansion_cap) {
    const std::string why = "p=" + std::to_string(p) + " exceeds expansion cap " + std::to_string(expansion_cap);
    return {{"lemma1", CheckStatus::Skip, why}, {"lemma2", CheckStatus::Skip, why}};
  }
  const std::uint64_t n = c.modulus();
  const auto ring = powers[0].ring();
  const auto S = generating_polynomial(s);
  const auto S_gr = detail::embed(S, ring);
  const auto linear = [&](std::uint64_t v) {
    return Polynomial<GaloisRing>(ring, {-powers[v], ring.one()});
  };

  detail::Tally t1("lemma1");
  std::vector<std::uint64_t> roots;
  for (std::uint64_t v = 0; v < n; ++v) {
    if (powers.evaluate_at_power(S, v).is_zero()) roots.push_back(v);
  }
  for (const auto v : roots) {
    const auto [q, rem] = divmod(S_gr, linear(v));
    t1.expect(rem.is_zero(), "X - gamma^" + std::to_string(v) + " does not divide S");
    t1.expect(linear(v) * q == S_gr, "quotient check at gamma^" + std::to_string(v));
    for (const auto w : roots) {
      if (w <= v || !(powers[v] - powers[w]).is_unit()) continue;
      const auto [q2, rem2] = divmod(q, linear(w));
      t1.expect(rem2.is_zero(), "second root gamma^" + std::to_string(w) + " after gamma^" + std::to_string(v));
    }
  }

  detail::Tally t2("lemma2");
  const auto sc = reeds_sloane(s).connection;
  const std::vector<std::pair<std::string, Polynomial<Z4>>> probes = {
      {"S", S},
      {"S*C", S * sc},
      {"X^p+1", detail::x_pow_plus(p, 1)},
      {"X^p-1", detail::x_pow_plus(p, 3)},
      {"X^2p+2X^p+1", detail::x_pow_plus(2 * p, 1) + Polynomial<Z4>::monomial(Z4{}, 2, p)},
  };
  const CyclotomicClass classes[] = {CyclotomicClass::D0, CyclotomicClass::D1, CyclotomicClass::E0,
                                     CyclotomicClass::E1};
  std::size_t applied = 0;
  for (const auto& [name, probe] : probes) {
    const auto probe_gr = detail::embed(probe, ring);
    const auto vanishes = [&](std::uint64_t v) { return powers.evaluate_at_power(probe, v).is_zero(); };
    const auto vanishes_on = [&](const std::vector<std::uint64_t>& set) {
      return std::all_of(set.begin(), set.end(), vanishes);
    };
    for (const auto cls : classes) {
      if (!vanishes_on(c.members(cls))) continue;
      ++applied;
      t2.expect(divmod(probe_gr, detail::root_product(powers, c.members(cls))).remainder.is_zero(),
                "(I) " + name + " vanishes on " + std::string(to_string(cls)) + " but is not divisible");
    }
    if (vanishes(p) && vanishes_on(c.d(0)) && vanishes_on(c.d(1))) {
      ++applied;
      t2.expect(divmod(probe, detail::x_pow_plus(p, 1)).remainder.is_zero(),
                "(II) X^p + 1 does not divide " + name);
    }
    if (vanishes(0) && vanishes_on(c.e(0)) && vanishes_on(c.e(1))) {
      ++applied;
      t2.expect(divmod(probe, detail::x_pow_plus(p, 3)).remainder.is_zero(),
                "(II) X^p - 1 does not divide " + name);
    }
  }
  // (III): the minimal connection polynomial for p ≡ ±3 (mod 8) meets the
  // hypotheses, so its degree is at least 2p - 1.
  if (!detail::pm_one_mod8(p)) {
    bool vanishes_off_axis = true;
    for (std::uint64_t v = 1; v < n; ++v) {
      if (v != p && !powers.evaluate_at_power(sc, v).is_zero()) vanishes_off_axis = false;
    }
    const auto at_one = powers.evaluate_at_power(sc, 0);
    const auto at_minus_one = powers.evaluate_at_power(sc, p);
    const auto in_02 = [&](const GaloisRingElement& x) { return x.is_zero() || x == ring.constant(2); };
    t2.expect(vanishes_off_axis && in_02(at_one) && in_02(at_minus_one), "(III) hypotheses fail for C");
    t2.expect(sc.degree() >= 2 * p - 1, "(III) deg C < 2p - 1");
    ++applied;
  }
  return {t1.result(std::to_string(roots.size()) + " roots of S divided out"),
          t2.result(std::to_string(applied) + " divisibility instances")};
}

/// X^(2p) - 1 + 2(X^p + 1) vanishes at every gamma^j without being divisible
/// by X^(2p) - 1.
[[nodiscard]] inline CheckResult check_vanishing_remark(const PowerTable& powers, std::uint64_t p) {
  const auto P = detail::x_pow_plus(2 * p, 3) + Residue4{2} * detail::x_pow_plus(p, 1);
  detail::Tally t("remark");
  for (std::uint64_t j = 0; j < 2 * p; ++j) {
    t.expect(powers.evaluate_at_power(P, j).is_zero(), "P(gamma^" + std::to_string(j) + ") != 0");
  }
  t.expect(!divmod(P, detail::x_pow_plus(2 * p, 3)).remainder.is_zero(),
           "X^2p - 1 unexpectedly divides P");
  return t.result("vanishes at all gamma^j, remainder mod X^2p-1 is nonzero");
}

[[nodiscard]] inline CheckResult check_theorem(const QuaternarySequence& s) {
  const auto lc = reeds_sloane(s).lc;
  const auto expected = theorem_lc(s.p());
  const std::string detail = "lc " + std::to_string(lc) + " = " + std::to_string(expected) + " (" +
                             std::string(to_string(classify_prime(s.p()))) + ")";
  if (lc == expected) return {"theorem", CheckStatus::Pass, detail};
  return {"theorem", CheckStatus::Fail,
          "reeds-sloane lc " + std::to_string(lc) + " != theorem " + std::to_string(expected)};
}

inline constexpr std::uint64_t kDefaultExpansionCap = 61;

struct ReportOptions {
  std::uint64_t expansion_cap = kDefaultExpansionCap;
  std::set<std::string> only;  // empty selects every check
};

/// Normalizes a check filter token: "6" -> "lemma6"; names pass through.
/// Throws InvalidArgument on unknown names.
[[nodiscard]] inline std::string canonical_check_id(std::string_view token) {
  std::string id(token);
  if (!id.empty() && std::all_of(id.begin(), id.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    id = "lemma" + id;
  }
  const auto& ids = check_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw InvalidArgument("unknown check '" + std::string(token) + "'");
  }
  return id;
}

/// Every applicable check for p, in check_ids() order.
[[nodiscard]] inline LemmaReport full_report(std::uint64_t p, const ReportOptions& options = {}) {
  require_odd_prime(p, "full_report");
  const auto wanted = [&](std::string_view id) {
    return options.only.empty() || options.only.count(std::string(id)) > 0;
  };
  const GeneralizedCyclotomy c(p);
  const QuaternarySequence s(c);

  std::vector<CheckResult> checks;
  if (wanted("lemma3")) checks.push_back(check_lemma3(c));
  if (wanted("lemma5")) checks.push_back(check_lemma5(c));

  const bool needs_ring = std::any_of(check_ids().begin(), check_ids().end(), [&](const std::string& id) {
    return wanted(id) && id != "lemma3" && id != "lemma5" && id != "theorem";
  });
  if (needs_ring) {
    const auto ring = GaloisRing::for_prime(p);
    const auto ng = normalize_gamma(c, find_gamma(ring, p).gamma);
    const PowerTable powers(ng.gamma, c.modulus());
    if (wanted("identity")) checks.push_back(check_identities(c, powers, s));
    if (wanted("units")) checks.push_back(check_unit_differences(powers, p));
    if (wanted("lemma6")) checks.push_back(check_lemma6(c, powers));
    if (wanted("lemma7")) checks.push_back(check_lemma7(c, powers));
    if (wanted("lemma4") || wanted("lemma8")) {
      for (auto& r : check_lemma4_lemma8(c, powers, s)) {
        if (wanted(r.id)) checks.push_back(std::move(r));
      }
    }
    if (wanted("lemma1") || wanted("lemma2")) {
      for (auto& r : check_root_division(c, powers, s, options.expansion_cap)) {
        if (wanted(r.id)) checks.push_back(std::move(r));
      }
    }
    if (wanted("factorization") || wanted("lemma9")) {
      for (auto& r : check_factorizations(c, powers, options.expansion_cap)) {
        if (wanted(r.id)) checks.push_back(std::move(r));
      }
    }
    if (wanted("remark")) checks.push_back(check_vanishing_remark(powers, p));
  }
  if (wanted("theorem")) checks.push_back(check_theorem(s));
  return {p, std::move(checks)};
}

}  // namespace cyclo4
