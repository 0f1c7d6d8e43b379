// Copyright 2026 The afpower Authors.
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

// Verification harness: sweeps (k, m) over a family, compares the closed-form
// value with the exact oracle, and emits CSV/JSON reports.
//
// The oracle is authoritative. A MISMATCH row is a finding about a formula,
// not a failure of the harness.

#ifndef AFPOWER_HARNESS_HPP_
#define AFPOWER_HARNESS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "afpower/antiforcing.hpp"
#include "afpower/formulas.hpp"
#include "afpower/generators.hpp"
#include "afpower/graph.hpp"
#include "json.hpp"

namespace afpower {

// A solver or report disagreed with itself; exit code 3 territory.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Status { kMatch, kMismatch, kWithinBounds, kBoundViolation, kOutOfRange, kSkipped };

inline constexpr std::array<Status, 6> kAllStatuses{
    Status::kMatch,          Status::kMismatch,   Status::kWithinBounds,
    Status::kBoundViolation, Status::kOutOfRange, Status::kSkipped};

inline constexpr std::string_view status_name(Status s) {
  switch (s) {
    case Status::kMatch: return "MATCH";
    case Status::kMismatch: return "MISMATCH";
    case Status::kWithinBounds: return "WITHIN_BOUNDS";
    case Status::kBoundViolation: return "BOUND_VIOLATION";
    case Status::kOutOfRange: return "OUT_OF_RANGE";
    case Status::kSkipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

struct VerificationRecord {
  std::string family;
  int k = 0;
  int m = 0;
  int n = 0;
  std::optional<Rational> formula_value;
  std::string formula_case;
  Applicability applicability = Applicability::kOutOfRange;
  std::optional<int> oracle_value;
  std::optional<Rational> bound_lower;
  std::optional<Rational> bound_upper;
  Status status = Status::kSkipped;

  // Not part of the emitted report.
  std::vector<Edge> witness;
  Method method = Method::kViaMatchings;
};

// Pure function of the record fields. Budget exhaustion wins over everything,
// then the applicability domain, then bounds, then point comparison.
inline Status classify(Applicability applicability,
                       const std::optional<Rational>& formula_value,
                       const std::optional<int>& oracle_value,
                       const std::optional<Rational>& bound_lower,
                       const std::optional<Rational>& bound_upper) {
  if (!oracle_value) return Status::kSkipped;
  if (applicability == Applicability::kOutOfRange) return Status::kOutOfRange;
  const Rational oracle(*oracle_value);
  if (bound_lower || bound_upper) {
    const bool ok = (!bound_lower || *bound_lower <= oracle) &&
                    (!bound_upper || oracle <= *bound_upper);
    return ok ? Status::kWithinBounds : Status::kBoundViolation;
  }
  if (!formula_value) return Status::kOutOfRange;
  return *formula_value == oracle ? Status::kMatch : Status::kMismatch;
}

inline Status classify(const VerificationRecord& r) {
  return classify(r.applicability, r.formula_value, r.oracle_value, r.bound_lower,
                  r.bound_upper);
}

// Inclusive arithmetic range "first:last[:step]".
struct Range {
  int first = 0;
  int last = 0;
  int step = 1;

  std::vector<int> values() const {
    std::vector<int> out;
    for (int v = first; v <= last; v += step) out.push_back(v);
    return out;
  }
};

inline Range parse_range(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    const std::string_view piece =
        text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      throw std::invalid_argument("malformed range '" + std::string(text) + "'");
    }
    parts.push_back(v);
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() > 3) throw std::invalid_argument("malformed range '" + std::string(text) + "'");
  Range r{parts[0], parts.size() > 1 ? parts[1] : parts[0], parts.size() > 2 ? parts[2] : 1};
  if (r.step < 1 || r.first > r.last) {
    throw std::invalid_argument("empty range '" + std::string(text) + "'");
  }
  return r;
}

// Oracle limits for a sweep. Graphs without a perfect matching are always
// graded (af = |E| needs only a maximum matching); the order caps apply to
// graphs that need the exponential solvers.
struct OracleBudget {
  int max_order = 14;         // af_via_matchings
  int max_cross_check_order = 8;  // af_subset_search cross-check
  Budget per_instance{0, std::chrono::milliseconds(10000)};
};

// Defaults, optionally overridden by AFPOWER_TIME_CAP_MS, AFPOWER_NODE_CAP and
// AFPOWER_MAX_ORDER.
inline OracleBudget default_oracle_budget() {
  OracleBudget b;
  auto read = [](const char* name) -> std::optional<long long> {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (*end != '\0' || v < 0) {
      throw std::invalid_argument(std::string("invalid value for ") + name);
    }
    return v;
  };
  if (auto v = read("AFPOWER_TIME_CAP_MS")) b.per_instance.time_limit = std::chrono::milliseconds(*v);
  if (auto v = read("AFPOWER_NODE_CAP")) b.per_instance.node_limit = static_cast<std::uint64_t>(*v);
  if (auto v = read("AFPOWER_MAX_ORDER")) b.max_order = static_cast<int>(*v);
  return b;
}

struct SweepSpec {
  Family family = Family::kPath;
  Range k_range;
  Range m_range;
  OracleBudget budget;
  int jobs = 1;
};

namespace detail {

struct OracleOutcome {
  std::optional<int> value;
  std::vector<Edge> witness;
  Method method = Method::kViaMatchings;
};

// Exact af with the cross-check and witness audit. Throws InvariantViolation
// when the two solvers disagree or a witness fails to validate.
inline OracleOutcome run_oracle(const Graph& g, const OracleBudget& budget) {
  OracleOutcome out;
  if (!has_perfect_matching(g)) {
    const AntiForcingResult r = af_via_matchings(g);
    out.value = r.value;
    out.method = r.method;
    if (r.value != static_cast<int>(g.size())) {
      throw InvariantViolation("no-perfect-matching convention broken");
    }
    return out;
  }
  if (g.order() > budget.max_order) return out;
  AntiForcingResult primary;
  try {
    primary = af_via_matchings(g, budget.per_instance);
  } catch (const BudgetExceeded&) {
    return out;
  }
  if (!is_anti_forcing_set(g, primary.witness) ||
      static_cast<int>(primary.witness.size()) != primary.value) {
    throw InvariantViolation("af_via_matchings returned an invalid witness");
  }
  if (g.order() <= budget.max_cross_check_order) {
    try {
      const AntiForcingResult check = af_subset_search(g, budget.per_instance);
      if (check.value != primary.value) {
        throw InvariantViolation("af_subset_search (" + std::to_string(check.value) +
                                 ") disagrees with af_via_matchings (" +
                                 std::to_string(primary.value) + ")");
      }
    } catch (const BudgetExceeded&) {
      return out;
    }
  }
  out.value = primary.value;
  out.witness = std::move(primary.witness);
  out.method = primary.method;
  return out;
}

inline VerificationRecord make_record(Family family, int k, int m, const OracleBudget& budget) {
  const Graph g = power(make_family(family, k), m);
  VerificationRecord r;
  r.family = std::string(family_name(family));
  r.k = k;
  r.m = m;
  r.n = g.order();
  if (const auto f = evaluate_formula(family, k, m)) {
    r.formula_value = f->value;
    r.formula_case = f->case_label;
    r.applicability = f->applicability;
    if (f->bounds) {
      r.bound_lower = f->bounds->lower;
      r.bound_upper = f->bounds->upper;
    }
  } else {
    r.formula_case = "no-formula";
    r.applicability = Applicability::kOutOfRange;
  }
  OracleOutcome o = run_oracle(g, budget);
  r.oracle_value = o.value;
  r.witness = std::move(o.witness);
  r.method = o.method;
  r.status = classify(r);
  return r;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  const auto n_workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  for (std::size_t w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// k values in the range that the family (and its formula) accepts.
inline std::vector<int> sweep_k_values(Family family, const Range& k_range) {
  std::vector<int> ks;
  for (int k : k_range.values()) {
    if (formula_accepts(family, k)) ks.push_back(k);
  }
  return ks;
}

// Records in (k, m) order.
inline std::vector<VerificationRecord> run_sweep(const SweepSpec& spec) {
  if (spec.m_range.first < 1) throw std::invalid_argument("m range must start at 1 or above");
  const std::vector<int> ks = sweep_k_values(spec.family, spec.k_range);
  const std::vector<int> ms = spec.m_range.values();
  std::vector<std::pair<int, int>> points;
  for (int k : ks) {
    for (int m : ms) points.emplace_back(k, m);
  }
  std::vector<VerificationRecord> records(points.size());
  detail::parallel_for(points.size(), spec.jobs, [&](std::size_t i) {
    records[i] = detail::make_record(spec.family, points[i].first, points[i].second, spec.budget);
  });
  return records;
}

// The sweep set behind `verify all`, sized to finish in well under the
// per-instance time cap so repeated runs are byte-identical.
inline std::vector<SweepSpec> default_sweeps() {
  const OracleBudget budget = default_oracle_budget();
  return {
      {Family::kPath, {2, 12, 1}, {1, 4, 1}, budget, 1},
      {Family::kCycle, {3, 12, 1}, {1, 4, 1}, budget, 1},
      {Family::kComplete, {2, 8, 1}, {1, 2, 1}, budget, 1},
      {Family::kFriendship, {1, 5, 1}, {1, 3, 1}, budget, 1},
      {Family::kTriangularChain, {1, 6, 1}, {1, 4, 1}, budget, 1},
      {Family::kOrthoChain, {2, 8, 2}, {1, 6, 1}, budget, 1},
      {Family::kParaChain, {2, 8, 2}, {1, 6, 1}, budget, 1},
  };
}

// Monotonicity audit: one record per m in [2, m_max] whose lower
// bound is the oracle value at m - 1. BOUND_VIOLATION rows are findings.
inline std::vector<VerificationRecord> run_monotonicity_check(const Graph& g, int m_max,
                                                              const OracleBudget& budget,
                                                              const std::string& name = "graph") {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  if (!is_connected(g)) throw std::invalid_argument("monotonicity check needs a connected graph");
  std::vector<VerificationRecord> records;
  std::optional<int> previous;
  for (int m = 1; m <= m_max; ++m) {
    const Graph gm = power(g, m);
    const detail::OracleOutcome o = detail::run_oracle(gm, budget);
    if (m >= 2) {
      VerificationRecord r;
      r.family = name;
      r.k = g.order();
      r.m = m;
      r.n = gm.order();
      r.formula_case = "monotone";
      r.applicability = Applicability::kInRange;
      r.oracle_value = o.value;
      r.witness = o.witness;
      r.method = o.method;
      if (previous) r.bound_lower = Rational(*previous);
      r.status = previous ? classify(r) : Status::kSkipped;
      records.push_back(std::move(r));
    }
    previous = o.value;
  }
  return records;
}

// ---------------------------------------------------------------------------
// Report emission.

inline constexpr std::array<std::string_view, 11> kReportColumns{
    "family",        "k",           "m",           "n",           "formula_value",
    "formula_case",  "applicability", "oracle_value", "bound_lower", "bound_upper",
    "status"};

enum class ReportFormat { kCsv, kJson };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "json") return ReportFormat::kJson;
  throw std::invalid_argument("unknown report format '" + std::string(s) + "'");
}

namespace detail {

inline std::string optional_rational(const std::optional<Rational>& r) {
  return r ? to_string(*r) : "n/a";
}

inline std::string oracle_text(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "skipped(budget)";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline nlohmann::ordered_json rational_json(const std::optional<Rational>& r) {
  if (!r) return "n/a";
  if (r->denominator() == 1) return r->numerator();
  return to_string(*r);
}

inline std::optional<Rational> rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const std::string s = j.get<std::string>();
  if (s == "n/a") return std::nullopt;
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace detail

inline void emit_csv(const std::vector<VerificationRecord>& records, std::ostream& out) {
  for (std::size_t i = 0; i < kReportColumns.size(); ++i) {
    out << (i ? "," : "") << kReportColumns[i];
  }
  out << '\n';
  for (const auto& r : records) {
    out << detail::csv_field(r.family) << ',' << r.k << ',' << r.m << ',' << r.n << ','
        << detail::optional_rational(r.formula_value) << ','
        << detail::csv_field(r.formula_case) << ',' << applicability_name(r.applicability)
        << ',' << detail::oracle_text(r.oracle_value) << ','
        << detail::optional_rational(r.bound_lower) << ','
        << detail::optional_rational(r.bound_upper) << ',' << status_name(r.status) << '\n';
  }
}

inline nlohmann::ordered_json records_to_json(const std::vector<VerificationRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["k"] = r.k;
    j["m"] = r.m;
    j["n"] = r.n;
    j["formula_value"] = detail::rational_json(r.formula_value);
    j["formula_case"] = r.formula_case;
    j["applicability"] = applicability_name(r.applicability);
    if (r.oracle_value) {
      j["oracle_value"] = *r.oracle_value;
    } else {
      j["oracle_value"] = "skipped(budget)";
    }
    j["bound_lower"] = detail::rational_json(r.bound_lower);
    j["bound_upper"] = detail::rational_json(r.bound_upper);
    j["status"] = status_name(r.status);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::vector<VerificationRecord> records_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("report JSON must be an array");
  std::vector<VerificationRecord> out;
  for (const auto& j : arr) {
    VerificationRecord r;
    r.family = j.at("family").get<std::string>();
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.formula_value = detail::rational_from_json(j.at("formula_value"));
    r.formula_case = j.at("formula_case").get<std::string>();
    const std::string app = j.at("applicability").get<std::string>();
    if (app != "in_range" && app != "out_of_range") {
      throw std::invalid_argument("unknown applicability '" + app + "'");
    }
    r.applicability = app == "in_range" ? Applicability::kInRange : Applicability::kOutOfRange;
    const auto& oracle = j.at("oracle_value");
    if (oracle.is_number_integer()) r.oracle_value = oracle.get<int>();
    r.bound_lower = detail::rational_from_json(j.at("bound_lower"));
    r.bound_upper = detail::rational_from_json(j.at("bound_upper"));
    const std::string status = j.at("status").get<std::string>();
    auto it = std::find_if(kAllStatuses.begin(), kAllStatuses.end(),
                           [&](Status s) { return status_name(s) == status; });
    if (it == kAllStatuses.end()) throw std::invalid_argument("unknown status '" + status + "'");
    r.status = *it;
    out.push_back(std::move(r));
  }
  return out;
}

inline void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                        std::ostream& out) {
  if (format == ReportFormat::kCsv) {
    emit_csv(records, out);
  } else {
    out << records_to_json(records).dump(2) << '\n';
  }
}

inline std::map<Status, int> status_counts(const std::vector<VerificationRecord>& records) {
  std::map<Status, int> counts;
  for (const auto& r : records) ++counts[r.status];
  return counts;
}

// "MATCH=3 MISMATCH=1 ..." over every status, in fixed order.
inline void write_status_summary(const std::vector<VerificationRecord>& records,
                                 std::ostream& out) {
  const auto counts = status_counts(records);
  bool first = true;
  for (Status s : kAllStatuses) {
    const auto it = counts.find(s);
    out << (first ? "" : " ") << status_name(s) << '=' << (it == counts.end() ? 0 : it->second);
    first = false;
  }
  out << '\n';
}

}  // namespace afpower

#endif  // AFPOWER_HARNESS_HPP_
