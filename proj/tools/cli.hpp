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
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo4/cyclo4.hpp"

namespace cyclo4::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerificationFailure = 2, kInternalError = 3 };

using Json = nlohmann::json;

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
[[nodiscard]] inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

inline void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InvalidArgument("format '" + format + "' is not supported by this command");
}

[[nodiscard]] inline Json connection_json(const Polynomial<Z4>& c) {
  Json arr = Json::array();
  for (const auto x : c.coefficients()) arr.push_back(x.value());
  return arr;
}

inline int cmd_classes(std::uint64_t p, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"});
  const GeneralizedCyclotomy c(p);
  if (format == "json") {
    out << render(Json{{"p", p}, {"g", c.g()}, {"D0", c.d(0)}, {"D1", c.d(1)}, {"E0", c.e(0)}, {"E1", c.e(1)}});
    return kOk;
  }
  const auto line = [&](const char* name, const std::vector<std::uint64_t>& set) {
    out << name << ':';
    for (const auto v : set) out << ' ' << v;
    out << '\n';
  };
  out << "p: " << p << "\ng: " << c.g() << '\n';
  line("D0", c.d(0));
  line("D1", c.d(1));
  line("E0", c.e(0));
  line("E1", c.e(1));
  return kOk;
}

inline int cmd_seq(std::uint64_t p, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"});
  const auto s = generate_sequence(p);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto x : s.values()) arr.push_back(x.value());
    out << render(arr);
  } else {
    out << s.to_string() << '\n';
  }
  return kOk;
}

inline int cmd_lc(std::uint64_t p, const std::string& method, bool force, const std::string& format,
                  std::ostream& out) {
  require_format(format, {"text", "json"});
  require_odd_prime(p, "lc");
  std::size_t lc = 0;
  std::optional<Polynomial<Z4>> witness;
  if (method == "theorem") {
    lc = theorem_lc(p);
  } else if (method == "reeds-sloane") {
    auto r = reeds_sloane(generate_sequence(p));
    lc = r.lc;
    witness = std::move(r.connection);
  } else if (method == "brute") {
    if (p > 7 && !force) throw InvalidArgument("brute force is exponential; use --force for p > 7");
    auto r = brute_force_minimal(generate_sequence(p));
    lc = r.lc;
    witness = std::move(r.connection);
  } else {
    throw InvalidArgument("unknown method '" + method + "'");
  }
  if (format == "json") {
    Json j{{"p", p}, {"method", method}, {"lc", lc}};
    if (witness) j["connection"] = connection_json(*witness);
    out << render(j);
    return kOk;
  }
  out << lc << '\n';
  if (witness) {
    const auto coeffs = witness->coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? "," : "") << static_cast<int>(coeffs[i].value());
    out << '\n';
  }
  return kOk;
}

/// CYCLO4_EXPANSION_CAP, or the library default when unset.
[[nodiscard]] inline std::uint64_t expansion_cap_from_env() {
  const char* raw = std::getenv("CYCLO4_EXPANSION_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultExpansionCap;
  std::uint64_t cap = 0;
  std::istringstream is(raw);
  if (!(is >> cap) || !is.eof()) throw InvalidArgument("CYCLO4_EXPANSION_CAP is not a non-negative integer");
  return cap;
}

[[nodiscard]] inline std::set<std::string> parse_filter(const std::string& lemmas) {
  std::set<std::string> only;
  std::istringstream is(lemmas);
  std::string token;
  while (std::getline(is, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    if (token.empty()) throw InvalidArgument("empty entry in --lemmas");
    only.insert(canonical_check_id(token));
  }
  return only;
}

inline int cmd_verify(std::uint64_t p, const std::string& lemmas, const std::string& format, std::ostream& out) {
  require_format(format, {"text", "json"});
  ReportOptions options;
  options.expansion_cap = expansion_cap_from_env();
  if (!lemmas.empty()) options.only = parse_filter(lemmas);
  const auto report = full_report(p, options);
  if (format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    }
    out << render(Json{{"p", p}, {"passed", report.passed()}, {"checks", checks}});
  } else {
    out << report;
  }
  return report.passed() ? kOk : kVerificationFailure;
}

struct SweepRecord {
  std::uint64_t p = 0;
  std::string residue_class;
  std::uint64_t r = 0;
  std::size_t lc_theorem = 0;
  std::size_t lc_reeds_sloane = 0;
  bool match = false;
  std::int64_t elapsed_ms = 0;
};

[[nodiscard]] inline SweepRecord sweep_one(std::uint64_t p) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.p = p;
  rec.residue_class = std::string(to_string(classify_prime(p)));
  rec.r = ord2_mod_p(p);
  rec.lc_theorem = theorem_lc(p);
  rec.lc_reeds_sloane = reeds_sloane(generate_sequence(p)).lc;
  rec.match = rec.lc_theorem == rec.lc_reeds_sloane;
  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

/// One record per odd prime in [from, to], ascending in p whatever the
/// worker count.
[[nodiscard]] inline std::vector<SweepRecord> sweep(std::uint64_t from, std::uint64_t to, unsigned jobs = 1) {
  if (from < 3 || from > to) throw InvalidArgument("sweep needs 3 <= from <= to");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = from; p <= to; ++p) {
    if (p % 2 == 1 && is_prime(p)) primes.push_back(p);
  }
  std::vector<SweepRecord> records(primes.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) records[i] = sweep_one(primes[i]);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < primes.size(); i = next++) records[i] = sweep_one(primes[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

inline constexpr const char* kSweepCsvHeader = "p,residue_class,r,lc_theorem,lc_reeds_sloane,match,elapsed_ms";

inline void write_sweep(const std::vector<SweepRecord>& records, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    os << kSweepCsvHeader << '\n';
    for (const auto& r : records) {
      os << r.p << ',' << r.residue_class << ',' << r.r << ',' << r.lc_theorem << ',' << r.lc_reeds_sloane << ','
         << (r.match ? "true" : "false") << ',' << r.elapsed_ms << '\n';
    }
    return;
  }
  Json arr = Json::array();
  for (const auto& r : records) {
    arr.push_back({{"p", r.p},
                   {"residue_class", r.residue_class},
                   {"r", r.r},
                   {"lc_theorem", r.lc_theorem},
                   {"lc_reeds_sloane", r.lc_reeds_sloane},
                   {"match", r.match},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  os << render(arr);
}

inline int cmd_sweep(std::uint64_t from, std::uint64_t to, const std::string& path, const std::string& format,
                     unsigned jobs, std::ostream& out, std::ostream& err) {
  require_format(format, {"csv", "json"});
  const auto records = sweep(from, to, jobs);
  const auto mismatches = std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.match; });
  std::ostream* summary = &out;
  if (path.empty()) {
    write_sweep(records, format, out);
    summary = &err;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
    write_sweep(records, format, file);
    file.close();
    if (!file) throw InvalidArgument("failed writing '" + path + "'");
  }
  *summary << records.size() << " primes, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kVerificationFailure;
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternary generalized cyclotomic sequences over Z4", "cyclo4"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::string format = "text";
  std::string method = "reeds-sloane";
  std::string lemmas;
  bool force = false;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string path;
  std::string sweep_format = "csv";
  unsigned jobs = 1;

  const auto add_p = [&](CLI::App* sub) { sub->add_option("--p", p, "odd prime")->required(); };

  auto* classes = app.add_subcommand("classes", "generalized cyclotomic classes mod 2p");
  add_p(classes);
  classes->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* seq = app.add_subcommand("seq", "one period of the sequence");
  add_p(seq);
  seq->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lc = app.add_subcommand("lc", "linear complexity and a minimal connection polynomial");
  add_p(lc);
  lc->add_option("--method", method)->check(CLI::IsMember({"reeds-sloane", "brute", "theorem"}));
  lc->add_flag("--force", force, "allow brute force for p > 7");
  lc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "check the algebraic identities in GR(4^r,4)");
  add_p(verify);
  verify->add_option("--lemmas", lemmas, "comma-separated subset, e.g. 6,7 or lemma4,units");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* sw = app.add_subcommand("sweep", "compare synthesis against the closed form over a prime range");
  sw->add_option("--from", from)->required();
  sw->add_option("--to", to)->required();
  sw->add_option("--out", path, "output file (stdout when omitted)");
  sw->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));
  sw->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*classes) return cmd_classes(p, format, out);
    if (*seq) return cmd_seq(p, format, out);
    if (*lc) return cmd_lc(p, method, force, format, out);
    if (*verify) return cmd_verify(p, lemmas, format, out);
    return cmd_sweep(from, to, path, sweep_format, jobs, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace cyclo4::cli
