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

// Acceptance suite: one PASS/FAIL line per criterion. Runtime limits are part
// of each criterion. A failure whose exact signature matches a documented
// erratum in the reference data still prints FAIL; any other failure, or a
// documented one that stops reproducing, makes the exit status 1.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyclo4/cyclo4.hpp"
#include "support.hpp"

namespace {

using namespace cyclo4;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  bool documented = false;  // failure reproduces a documented erratum exactly
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_ms;  // 0 = no runtime bound
  std::function<Outcome()> body;
};

Outcome fail(std::string note) { return {false, std::move(note)}; }

Outcome golden_sequences() {
  const std::array<std::pair<std::uint64_t, const char*>, 3> cases = {
      {{3, "002231"}, {5, "0021323120"}, {7, "00212132203031"}}};
  for (const auto& [p, want] : cases) {
    if (generate_sequence(p).to_string() != want) return fail("p=" + std::to_string(p));
  }
  return {true, "p = 3, 5, 7"};
}

Outcome golden_lc() {
  for (const auto& g : testing::golden_cases()) {
    const auto lc = reeds_sloane(generate_sequence(g.p)).lc;
    if (lc != g.lc) return fail("p=" + std::to_string(g.p) + " lc=" + std::to_string(lc));
  }
  return {true, "p = 3, 5, 7, 17, 31, 41 -> 5, 10, 4, 18, 31, 22"};
}

// The listed p = 31 polynomial 1 + 3X^31 is not an annihilator: since
// s_{u+31} = s_u + 2 it leaves 2(1 + X + ... + X^61). Synthesis finds a
// degree-31 witness that differs from it only in even coefficients.
bool is_thirty_one_erratum(const QuaternarySequence& s, const Polynomial<Z4>& listed) {
  const std::uint64_t p = 31;
  const auto residual = mod_cyclic(generating_polynomial(s) * listed, 2 * p);
  if (!(residual == Polynomial<Z4>(Z4{}, std::vector<Residue4>(2 * p, 2)))) return false;
  const auto r = reeds_sloane(s);
  if (!(r.connection.degree() == p) || !verify_connection(s, r.connection)) return false;
  const auto diff = r.connection - listed;
  for (const auto c : diff.coefficients()) {
    if (c.value() % 2 != 0) return false;
  }
  return true;
}

Outcome golden_witnesses() {
  std::vector<std::uint64_t> bad;
  bool documented = true;
  std::size_t total = 0;
  for (const auto& g : testing::golden_cases()) {
    ++total;
    const auto s = generate_sequence(g.p);
    if (!(g.witness.degree() == theorem_lc(g.p))) return fail("p=" + std::to_string(g.p) + " degree mismatch");
    if (verify_connection(s, g.witness)) continue;
    bad.push_back(g.p);
    documented = documented && g.p == 31 && is_thirty_one_erratum(s, g.witness);
  }
  const auto ok_count = std::to_string(total - bad.size()) + "/" + std::to_string(total);
  if (bad.empty()) return {true, ok_count + " listed connection polynomials annihilate"};
  std::string which;
  for (const auto p : bad) which += (which.empty() ? "p=" : ",") + std::to_string(p);
  Outcome out = fail(ok_count + " annihilate, degrees all match; " + which + " does not annihilate");
  if (documented) {
    out.note += " (1+3X^31 leaves 2(1+X+...+X^61) since s_{u+31}=s_u+2; a degree-31 witness exists;"
                " documented erratum)";
    out.documented = true;
  }
  return out;
}

Outcome theorem_sweep() {
  std::size_t n = 0;
  for (const auto p : testing::odd_primes(3, 499)) {
    ++n;
    const auto lc = reeds_sloane(generate_sequence(p)).lc;
    if (lc != theorem_lc(p)) return fail("p=" + std::to_string(p));
  }
  return {true, std::to_string(n) + " primes, 0 mismatches"};
}

Outcome oracle_equivalence() {
  for (const std::uint64_t p : {3, 5, 7}) {
    const auto s = generate_sequence(p);
    const auto b = brute_force_minimal(s);
    const auto r = reeds_sloane(s);
    if (b.lc != r.lc) return fail("p=" + std::to_string(p));
    if (!verify_connection(s, b.connection) || !verify_connection(s, r.connection)) {
      return fail("p=" + std::to_string(p) + " witness");
    }
  }
  return {true, "p = 3, 5, 7"};
}

Outcome lemma_suite() {
  std::map<std::uint64_t, int> coverage;
  std::size_t n = 0;
  ReportOptions options;
  options.only = {"lemma3", "lemma4", "lemma5", "lemma6", "lemma7", "lemma8"};
  for (const auto p : testing::odd_primes(3, 199)) {
    ++n;
    ++coverage[p % 16];
    const auto report = full_report(p, options);
    if (report.checks.size() != options.only.size()) return fail("p=" + std::to_string(p) + " missing checks");
    for (const auto& c : report.checks) {
      if (c.status != CheckStatus::Pass) return fail("p=" + std::to_string(p) + " " + c.id + ": " + c.detail);
    }
  }
  for (std::uint64_t k = 1; k < 16; k += 2) {
    if (coverage[k] < 2) return fail("class " + std::to_string(k) + " mod 16 covered fewer than twice");
  }
  return {true, std::to_string(n) + " primes, all 8 odd classes mod 16 covered"};
}

Outcome factorizations() {
  std::size_t integral = 0;
  for (const auto p : testing::odd_primes(3, 61)) {
    ReportOptions options;
    options.only = {"factorization", "lemma9"};
    options.expansion_cap = 61;
    const auto report = full_report(p, options);
    const bool qr2 = p % 8 == 1 || p % 8 == 7;
    for (const auto& c : report.checks) {
      const auto want = c.id == "lemma9" && !qr2 ? CheckStatus::Skip : CheckStatus::Pass;
      if (c.status != want) return fail("p=" + std::to_string(p) + " " + c.id + ": " + c.detail);
      if (c.id == "lemma9" && qr2) ++integral;
    }
  }
  return {true, "p <= 61, integrality for " + std::to_string(integral) + " primes = +-1 mod 8"};
}

Outcome zero_divisor_regression() {
  std::size_t n = 0;
  for (const auto p : testing::odd_primes(3, 101)) {
    ++n;
    const auto ring = GaloisRing::for_prime(p);
    const PowerTable powers(find_gamma(ring, p).gamma, 2 * p);
    const auto P = testing::mono(1, 2 * p) + testing::mono(2, p) + testing::z4({1});
    for (std::uint64_t j = 0; j < 2 * p; ++j) {
      if (!powers.evaluate_at_power(P, j).is_zero()) return fail("p=" + std::to_string(p) + " nonzero value");
    }
    if (divmod(P, testing::mono(1, 2 * p) - testing::z4({1})).remainder.is_zero()) {
      return fail("p=" + std::to_string(p) + " divisibility inferred");
    }
    if (check_vanishing_remark(powers, p).status != CheckStatus::Pass) return fail("p=" + std::to_string(p));
  }
  return {true, std::to_string(n) + " primes"};
}

}  // namespace

int main() {
  const std::array<Criterion, 8> criteria = {{
      {"AC1", "golden sequences", 1.0, golden_sequences},
      {"AC2", "golden linear complexities", 1000.0, golden_lc},
      {"AC3", "golden witnesses", 0.0, golden_witnesses},
      {"AC4", "theorem sweep 3..499", 120000.0, theorem_sweep},
      {"AC5", "brute force agrees with synthesis", 30000.0, oracle_equivalence},
      {"AC6", "lemma suite p <= 199", 60000.0, lemma_suite},
      {"AC7", "factorization identities", 0.0, factorizations},
      {"AC8", "zero-divisor regression", 0.0, zero_divisor_regression},
  }};
  int failures = 0;
  int documented = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (outcome.ok && c.limit_ms > 0 && ms > c.limit_ms) {
      outcome = fail("over time limit " + std::to_string(static_cast<long>(c.limit_ms)) + " ms");
    }
    if (!outcome.ok) ++(outcome.documented ? documented : failures);
    std::string bound = c.limit_ms > 0 ? " limit " + std::to_string(static_cast<long>(c.limit_ms)) + " ms" : "";
    std::printf("%s %s %s: %s [%.3f ms%s]\n", c.id, outcome.ok ? "PASS" : "FAIL", c.title, outcome.note.c_str(), ms,
                bound.c_str());
  }
  // The p = 31 witness erratum is the only documented failure.
  return failures == 0 && documented == 1 ? 0 : 1;
}
