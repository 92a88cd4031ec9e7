// Copyright 2026 The circlefix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "circlefix/bounds.h"
#include "circlefix/chern.h"
#include "circlefix/error.h"
#include "circlefix/minimizer.h"
#include "json.hpp"
#include "reference_tables.h"
#include "table.h"

namespace circlefix::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int64_t kLatticeCap = 48;
constexpr int64_t kFullCoverageMaxM = 504;
constexpr int64_t kEvenLBound = 7;
constexpr int64_t kOddLBound = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Join(const std::vector<int64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += std::to_string(v[i]);
  }
  return "[" + s + "]";
}

void RequireHalfDimension(int64_t n) {
  if (n < 2) throw UsageError("n must be >= 2, got " + std::to_string(n));
}

void RequireFormat(const std::string& format,
                   std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported format '" + format + "'");
}

// ---- bound -----------------------------------------------------------------

struct BoundOptions {
  int64_t n = 0;
  bool c1_zero = false;
  bool witness = false;
  std::string format = "text";
};

int CmdBound(const BoundOptions& o, std::ostream& out) {
  RequireHalfDimension(o.n);
  RequireFormat(o.format, {"text", "json"});
  const BoundResult b = ClosedFormBound(o.n);
  const int64_t value = MinFixedPoints(o.n, o.c1_zero);
  std::optional<FixedPointProfile> witness;
  if (o.witness) witness = WitnessFullProfile(o.n);

  if (o.format == "json") {
    ordered_json j;
    j["n"] = b.n;
    j["dim"] = 2 * b.n;
    j["m"] = b.m;
    j["r"] = b.r;
    j["l"] = b.l;
    j["value"] = value;
    j["closed_form_value"] = b.value;
    j["branch"] = b.branch;
    j["c1_zero"] = o.c1_zero;
    if (witness) j["witness"] = witness->counts;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "n: " << b.n << '\n'
      << "dim: " << 2 * b.n << '\n'
      << "m: " << b.m << '\n'
      << "r: " << b.r << '\n'
      << "l: " << b.l << '\n'
      << "value: " << value << '\n'
      << "branch: " << b.branch << '\n';
  if (o.c1_zero) {
    out << "c1_zero: true\n"
        << "closed_form_value: " << b.value << '\n';
  }
  if (witness) out << "witness: " << Join(witness->counts) << '\n';
  return kExitOk;
}

// ---- table -----------------------------------------------------------------

std::pair<int64_t, int64_t> ParseDimRange(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int64_t d = std::stoll(s);
      return {d, d};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad --dims '" + s + "', expected A..B");
  }
}

int CmdTable(const std::string& dims, const std::string& format,
             std::ostream& out) {
  RequireFormat(format, {"md", "csv", "json"});
  const auto [lo, hi] = ParseDimRange(dims);
  if (lo % 2 != 0 || hi % 2 != 0 || lo < 4 || lo > hi) {
    throw UsageError("--dims needs even A, B with 4 <= A <= B");
  }
  const auto rows = BuildTable(lo, hi);
  if (format == "csv") {
    out << RenderCsv(rows);
  } else if (format == "json") {
    out << RenderJson(rows);
  } else {
    out << RenderMarkdown(rows);
  }
  return kExitOk;
}

// ---- divisibility ----------------------------------------------------------

int CmdDivisibility(int64_t n, bool c1_zero, const std::string& format,
                    std::ostream& out) {
  RequireHalfDimension(n);
  RequireFormat(format, {"text", "json"});
  const DivisibilityResult d = DivisibilityRefined(n, c1_zero);
  if (format == "json") {
    ordered_json j;
    j["n"] = d.n;
    j["c1_zero"] = d.c1_zero;
    j["modulus_thm_d"] = d.modulus_thm_d;
    j["modulus_hirzebruch"] = d.modulus_hirzebruch;
    j["modulus_refined"] = d.modulus_refined;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "n: " << d.n << '\n'
      << "c1_zero: " << (d.c1_zero ? "true" : "false") << '\n'
      << "modulus_thm_d: " << d.modulus_thm_d << '\n'
      << "modulus_hirzebruch: " << d.modulus_hirzebruch << '\n'
      << "modulus_refined: " << d.modulus_refined << '\n';
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

class Verifier {
 public:
  explicit Verifier(std::ostream& out) : out_(out) {}

  void Mismatch(int64_t n, const std::string& what, int64_t expected,
                int64_t actual) {
    ++mismatches_;
    out_ << "MISMATCH n=" << n << " " << what << ": expected " << expected
         << ", got " << actual << '\n';
  }

  void Cover(const std::string& branch, int64_t n) { coverage_.emplace(branch, n); }

  void CheckWitness(const MinimizationOutcome& o) {
    const auto& c = o.witness.counts;
    if (std::any_of(c.begin(), c.end(), [](int64_t x) { return x < 0; })) {
      Mismatch(o.n, "witness has negative entry", 0, -1);
    }
    if (Constraint(o.witness) != 0) {
      Mismatch(o.n, "witness constraint", 0, Constraint(o.witness));
    }
    if (Objective(o.witness) != o.minimum) {
      Mismatch(o.n, "witness objective", o.minimum, Objective(o.witness));
    }
    const int64_t chern = ChernC1Cn1(Expand(o.witness));
    if (chern != 0) Mismatch(o.n, "witness c1c(n-1)", 0, chern);
  }

  void SweepLSearch(int64_t max_m) {
    for (int64_t m = 1; m <= max_m; ++m) {
      for (int64_t n : {2 * m, 2 * m + 1}) {
        const BoundResult closed = ClosedFormBound(n);
        Cover(closed.branch, n);
        const MinimizationOutcome ls = Minimize(n);
        if (ls.minimum != closed.value) {
          Mismatch(n, "closed form vs l-search", closed.value, ls.minimum);
        }
        const int64_t l_bound = n % 2 == 0 ? kEvenLBound : kOddLBound;
        if (ls.l > l_bound) Mismatch(n, "l above proven bound", l_bound, ls.l);
        CheckWitness(ls);
      }
    }
    out_ << "closed form vs l-search: n = 2.." << 2 * max_m + 1 << '\n';
  }

  void SweepLattice(int64_t max_n) {
    for (int64_t n = 2; n <= max_n; ++n) {
      const auto feasible = EnumerateFeasible(n, kLatticeCap);
      const int64_t closed = ClosedFormBound(n).value;
      if (feasible.empty()) {
        Mismatch(n, "lattice minimum (no feasible point)", closed, 0);
        continue;
      }
      if (feasible.front().minimum != closed) {
        Mismatch(n, "closed form vs lattice", closed, feasible.front().minimum);
      }
      const int64_t modulus = DivisibilityThmD(n);
      for (const auto& f : feasible) {
        if (f.minimum % modulus != 0) {
          Mismatch(n, "lattice objective mod " + std::to_string(modulus), 0,
                   f.minimum % modulus);
        }
      }
    }
    if (max_n >= 2) {
      out_ << "lattice enumeration (cap " << kLatticeCap << "): n = 2.."
           << max_n << '\n';
    }
  }

  void CheckReference() {
    auto check = [&](const ReferenceRow& row) {
      const BoundResult b = ClosedFormBound(row.n);
      if (b.value != row.bound) Mismatch(row.n, "reference bound", row.bound, b.value);
      if (b.r != row.r) Mismatch(row.n, "reference r", row.r, b.r);
      if (b.branch != row.branch) {
        ++mismatches_;
        out_ << "MISMATCH n=" << row.n << " reference branch: expected "
             << row.branch << ", got " << b.branch << '\n';
      }
    };
    for (const auto& row : kEvenReference) check(row);
    for (const auto& row : kOddReference) check(row);
    out_ << "reference tables: " << kEvenReference.size() << " even, "
         << kOddReference.size() << " odd rows\n";
  }

  void ReportCoverage() {
    size_t hit = 0;
    std::ostringstream lines;
    for (std::string_view label : AllBranchLabels()) {
      auto it = coverage_.find(std::string(label));
      if (it == coverage_.end()) {
        lines << "  " << label << ": not exercised\n";
      } else {
        ++hit;
        lines << "  " << label << ": first n = " << it->second << '\n';
      }
    }
    out_ << "branches exercised: " << hit << "/" << AllBranchLabels().size()
         << '\n'
         << lines.str();
  }

  int mismatches() const { return mismatches_; }

 private:
  std::ostream& out_;
  int mismatches_ = 0;
  std::map<std::string, int64_t> coverage_;
};

int CmdVerify(int64_t max_m, int64_t lattice_max_n, std::ostream& out,
              std::ostream& err) {
  if (max_m < 1) throw UsageError("--max-m must be >= 1");
  if (lattice_max_n < 0) throw UsageError("--lattice-max-n must be >= 0");
  Verifier v(out);
  v.SweepLSearch(max_m);
  v.SweepLattice(lattice_max_n);
  v.CheckReference();
  v.ReportCoverage();
  if (max_m < kFullCoverageMaxM) {
    err << "warning: covering every case needs --max-m >= "
        << kFullCoverageMaxM << '\n';
  }
  out << (v.mismatches() == 0 ? "PASS" : "FAIL") << '\n';
  return v.mismatches() == 0 ? kExitOk : kExitMismatch;
}

// ---- chern -----------------------------------------------------------------

FixedPointProfile LoadProfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("profile must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw UsageError("field 'n' must be an integer");
  }
  if (!j.contains("counts") || !j["counts"].is_array()) {
    throw UsageError("field 'counts' must be an array");
  }
  FixedPointProfile p;
  p.n = j["n"].get<int>();
  for (const auto& c : j["counts"]) {
    if (!c.is_number_integer()) throw UsageError("counts must be integers");
    p.counts.push_back(c.get<int64_t>());
  }
  if (auto violation = p.Violation()) throw UsageError(*violation);
  for (int i = 0; i <= p.n; ++i) {
    if (p.counts[i] != p.counts[p.n - i]) {
      throw UsageError("symmetry violated: N_" + std::to_string(i) + " = " +
                       std::to_string(p.counts[i]) + " but N_" +
                       std::to_string(p.n - i) + " = " +
                       std::to_string(p.counts[p.n - i]));
    }
  }
  if (p.Total() == 0) throw UsageError("profile has no fixed points");
  return p;
}

int CmdChern(const std::string& path, std::ostream& out) {
  const FixedPointProfile p = LoadProfile(path);
  const int64_t value = ChernC1Cn1(p);
  out << "n: " << p.n << '\n'
      << "counts: " << Join(p.counts) << '\n'
      << "symmetric: yes\n"
      << "total_fixed_points: " << p.Total() << '\n'
      << "c1cn1: " << value << '\n';
  if (p.n == 3) {
    out << "dim6_action: "
        << HamiltonianClassName(Dim6HamiltonianClassifier(value)) << '\n';
  }
  return kExitOk;
}

// ---- witness ---------------------------------------------------------------

int CmdWitness(int64_t n, const std::string& format, std::ostream& out) {
  RequireHalfDimension(n);
  RequireFormat(format, {"text", "json"});
  const MinimizationOutcome o = Minimize(n);
  const FixedPointProfile full = Expand(o.witness);
  const int64_t chern = ChernC1Cn1(full);
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    j["reduced"] = o.witness.counts;
    j["counts"] = full.counts;
    j["total_fixed_points"] = full.Total();
    j["c1cn1"] = chern;
    j["l"] = o.l;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "n: " << n << '\n'
      << "reduced: " << Join(o.witness.counts) << '\n'
      << "counts: " << Join(full.counts) << '\n'
      << "total_fixed_points: " << full.Total() << '\n'
      << "c1cn1: " << chern << '\n'
      << "l: " << o.l << '\n';
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fixed-point bounds for circle actions with c1 c(n-1) = 0",
               "circlefix"};
  app.require_subcommand(1);

  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Lower bound B(n)");
  bound_cmd->add_option("n", bound.n, "Half-dimension n")->required();
  bound_cmd->add_flag("--c1-zero", bound.c1_zero, "Assume c1 = 0");
  bound_cmd->add_flag("--witness", bound.witness, "Print a minimizing profile");
  bound_cmd->add_option("--format", bound.format, "text or json");

  std::string dims = "4..30";
  std::string table_format = "md";
  auto* table_cmd = app.add_subcommand("table", "Summary table");
  table_cmd->add_option("--dims", dims, "Even dimension range A..B");
  table_cmd->add_option("--format", table_format, "md, csv or json");

  int64_t div_n = 0;
  bool div_c1_zero = false;
  std::string div_format = "text";
  auto* div_cmd = app.add_subcommand("divisibility", "Divisibility moduli");
  div_cmd->add_option("n", div_n, "Half-dimension n")->required();
  div_cmd->add_flag("--c1-zero", div_c1_zero, "Assume c1 = 0");
  div_cmd->add_option("--format", div_format, "text or json");

  int64_t max_m = 200;
  int64_t lattice_max_n = 30;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all solvers");
  verify_cmd->add_option("--max-m", max_m, "Largest m for the l-search sweep");
  verify_cmd->add_option("--lattice-max-n", lattice_max_n,
                         "Largest n for exhaustive enumeration");

  std::string profile_path;
  auto* chern_cmd = app.add_subcommand("chern", "Evaluate c1 c(n-1) of a profile");
  chern_cmd->add_option("--profile", profile_path, "Profile JSON file")
      ->required();

  int64_t witness_n = 0;
  std::string witness_format = "text";
  auto* witness_cmd = app.add_subcommand("witness", "Minimizing profile");
  witness_cmd->add_option("n", witness_n, "Half-dimension n")->required();
  witness_cmd->add_option("--format", witness_format, "text or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*bound_cmd) return CmdBound(bound, out);
    if (*table_cmd) return CmdTable(dims, table_format, out);
    if (*div_cmd) return CmdDivisibility(div_n, div_c1_zero, div_format, out);
    if (*verify_cmd) return CmdVerify(max_m, lattice_max_n, out, err);
    if (*chern_cmd) return CmdChern(profile_path, out);
    if (*witness_cmd) return CmdWitness(witness_n, witness_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace circlefix::cli
