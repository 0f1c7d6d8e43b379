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

// afpower command-line front end.
//
//   afpower gen path --k 6 | afpower power --m 2 | afpower af
//   afpower formula ortho-chain --k 4 --m 5
//   afpower verify cycle --k-range 4:10:2 --m-range 2:3 > cycle.csv
//   afpower verify all --output default.csv
//
// Exit codes: 0 success, 1 usage or input error, 2 budget exhausted,
// 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "afpower/antiforcing.hpp"
#include "afpower/formulas.hpp"
#include "afpower/generators.hpp"
#include "afpower/graph.hpp"
#include "afpower/graph_io.hpp"
#include "afpower/harness.hpp"
#include "afpower/matching.hpp"
#include "json.hpp"

namespace {

using namespace afpower;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInvariant = 3;

// Desk-scale limits; larger inputs need --allow-large.
constexpr int kDeskOrder = 16;
constexpr std::size_t kDeskEdges = 60;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Family family_or_throw(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw UsageError("unknown family '" + name + "'");
}

Graph load_graph(const std::string& input) {
  if (input.empty() || input == "-") return read_graph(std::cin);
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open '" + input + "'");
  return read_graph(in);
}

void check_desk_scale(const Graph& g, bool allow_large) {
  if (allow_large) return;
  if (g.order() > kDeskOrder || g.size() > kDeskEdges) {
    throw UsageError("graph has " + std::to_string(g.order()) + " vertices and " +
                     std::to_string(g.size()) + " edges; exact search beyond " +
                     std::to_string(kDeskOrder) + " vertices or " +
                     std::to_string(kDeskEdges) + " edges needs --allow-large");
  }
}

Budget budget_from(long long time_cap_ms, long long node_cap) {
  Budget b = default_oracle_budget().per_instance;
  if (time_cap_ms >= 0) b.time_limit = std::chrono::milliseconds(time_cap_ms);
  if (node_cap >= 0) b.node_limit = static_cast<std::uint64_t>(node_cap);
  return b;
}

nlohmann::ordered_json rational_or_null(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  if (r->denominator() == 1) return r->numerator();
  return to_string(*r);
}

nlohmann::ordered_json formula_json(const FormulaResult& f) {
  nlohmann::ordered_json j;
  j["value"] = rational_or_null(f.value);
  j["kind"] = kind_name(f.kind);
  j["case"] = f.case_label;
  j["applicability"] = applicability_name(f.applicability);
  if (f.bounds) {
    j["lower"] = rational_or_null(f.bounds->lower);
    j["upper"] = rational_or_null(f.bounds->upper);
  }
  if (f.closed_form) j["closed_form"] = rational_or_null(f.closed_form);
  return j;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string render(const std::vector<VerificationRecord>& records, ReportFormat format) {
  std::ostringstream ss;
  emit_report(records, format, ss);
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact anti-forcing numbers of graph powers, with formula audits"};
  app.require_subcommand(1);

  // gen
  std::string gen_family;
  int gen_k = 0;
  auto* gen = app.add_subcommand("gen", "Print a family graph as JSON");
  gen->add_option("family", gen_family,
                  "path|cycle|complete|friendship|tri-chain|ortho-chain|para-chain")
      ->required();
  gen->add_option("--k", gen_k, "Family size parameter")->required();

  // power
  int power_m = 0;
  std::string input;
  auto* pow_cmd = app.add_subcommand("power", "Read a graph and print its m-th power");
  pow_cmd->add_option("--m", power_m, "Power")->required();
  pow_cmd->add_option("--input", input, "Graph file (default: standard input)");

  // pm
  bool pm_count = false;
  bool pm_unique = false;
  std::size_t pm_cap = 0;
  bool allow_large = false;
  auto* pm = app.add_subcommand("pm", "Perfect matchings of a graph");
  auto* pm_count_flag = pm->add_flag("--count", pm_count, "Print the number of perfect matchings");
  pm->add_flag("--unique", pm_unique, "Print whether the perfect matching is unique")
      ->excludes(pm_count_flag);
  pm->add_option("--cap", pm_cap, "List at most this many matchings (0 = all)");
  pm->add_option("--input", input, "Graph file (default: standard input)");
  pm->add_flag("--allow-large", allow_large, "Lift the desk-scale size guard");

  // af
  std::string af_method = "matchings";
  long long time_cap_ms = -1;
  long long node_cap = -1;
  auto* af = app.add_subcommand("af", "Exact anti-forcing number of a graph");
  af->add_option("--method", af_method, "subset|matchings")
      ->check(CLI::IsMember({"subset", "matchings"}));
  af->add_option("--input", input, "Graph file (default: standard input)");
  af->add_option("--time-cap-ms", time_cap_ms, "Wall-clock cap in milliseconds");
  af->add_option("--node-cap", node_cap, "Search-node cap");
  af->add_flag("--allow-large", allow_large, "Lift the desk-scale size guard");

  // formula
  std::string formula_family;
  int formula_k = 0;
  int formula_m = 0;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form anti-forcing formula");
  formula->add_option("family", formula_family, "Family name")->required();
  formula->add_option("--k", formula_k, "Family size parameter")->required();
  formula->add_option("--m", formula_m, "Power")->required();

  // verify
  std::string verify_family;
  std::string k_range_text;
  std::string m_range_text;
  std::string format_text = "csv";
  std::string output;
  int jobs = 1;
  int max_order = -1;
  auto* verify = app.add_subcommand("verify", "Audit a formula against the exact oracle");
  verify->add_option("family", verify_family, "Family name, or 'all' for the default sweep")
      ->required();
  verify->add_option("--k-range", k_range_text, "first:last[:step], inclusive");
  verify->add_option("--m-range", m_range_text, "first:last[:step], inclusive");
  verify->add_option("--time-cap-ms", time_cap_ms, "Per-instance wall-clock cap");
  verify->add_option("--node-cap", node_cap, "Per-instance search-node cap");
  verify->add_option("--max-order", max_order, "Largest order given to the exact solver");
  verify->add_option("--format", format_text, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--output", output, "Report path (default: standard output)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  // report
  auto* report = app.add_subcommand("report", "Re-emit a JSON report in another format");
  report->add_option("--format", format_text, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->required();
  report->add_option("--input", input, "JSON report (default: standard input)");
  report->add_option("--output", output, "Report path (default: standard output)");

  // monotone
  int m_max = 0;
  auto* monotone = app.add_subcommand("monotone", "Check af(G^m) is non-decreasing in m");
  monotone->add_option("--m-max", m_max, "Largest power")->required();
  monotone->add_option("--input", input, "Graph file (default: standard input)");
  monotone->add_option("--format", format_text, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  monotone->add_option("--time-cap-ms", time_cap_ms, "Per-instance wall-clock cap");

  // consistency
  int k_max = 12;
  auto* consistency =
      app.add_subcommand("consistency", "Compare chain recurrences with their closed forms");
  consistency->add_option("--k-max", k_max, "Largest even chain length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      const Graph g = make_family(family_or_throw(gen_family), gen_k);
      std::cout << to_json(g).dump() << '\n';
    } else if (*pow_cmd) {
      std::cout << to_json(power(load_graph(input), power_m)).dump() << '\n';
    } else if (*pm) {
      const Graph g = load_graph(input);
      check_desk_scale(g, allow_large);
      nlohmann::ordered_json j;
      if (pm_count) {
        j["count"] = count_perfect_matchings(g);
      } else if (pm_unique) {
        j["unique"] = has_unique_perfect_matching(g);
      } else {
        auto list = nlohmann::ordered_json::array();
        const auto cap = pm_cap == 0 ? std::nullopt : std::optional<std::size_t>(pm_cap);
        for (const Matching& m : enumerate_perfect_matchings(g, cap)) {
          list.push_back(edges_to_json(m.edges()));
        }
        j["matchings"] = std::move(list);
      }
      std::cout << j.dump() << '\n';
    } else if (*af) {
      const Graph g = load_graph(input);
      check_desk_scale(g, allow_large);
      const Budget budget = budget_from(time_cap_ms, node_cap);
      const AntiForcingResult r =
          af_method == "subset" ? af_subset_search(g, budget) : af_via_matchings(g, budget);
      if (r.method != Method::kConventionNoPerfectMatching && !is_anti_forcing_set(g, r.witness)) {
        throw InvariantViolation("solver returned an invalid witness");
      }
      nlohmann::ordered_json j;
      j["value"] = r.value;
      j["witness"] = edges_to_json(r.witness);
      j["method"] = method_name(r.method);
      std::cout << j.dump() << '\n';
    } else if (*formula) {
      const auto f = evaluate_formula(family_or_throw(formula_family), formula_k, formula_m);
      if (!f) throw UsageError("no formula is known for family '" + formula_family + "'");
      std::cout << formula_json(*f).dump() << '\n';
    } else if (*verify) {
      OracleBudget budget = default_oracle_budget();
      budget.per_instance = budget_from(time_cap_ms, node_cap);
      if (max_order >= 0) budget.max_order = max_order;
      std::vector<SweepSpec> sweeps;
      if (verify_family == "all") {
        if (!k_range_text.empty() || !m_range_text.empty()) {
          throw UsageError("'verify all' runs the default sweep and takes no ranges");
        }
        sweeps = default_sweeps();
        for (auto& s : sweeps) {
          s.budget = budget;
          s.jobs = jobs;
        }
      } else {
        if (k_range_text.empty() || m_range_text.empty()) {
          throw UsageError("verify needs --k-range and --m-range");
        }
        sweeps.push_back({family_or_throw(verify_family), parse_range(k_range_text),
                          parse_range(m_range_text), budget, jobs});
      }
      std::vector<VerificationRecord> records;
      for (const auto& s : sweeps) {
        auto part = run_sweep(s);
        records.insert(records.end(), part.begin(), part.end());
      }
      write_output(output, render(records, parse_report_format(format_text)));
      write_status_summary(records, std::cerr);
    } else if (*report) {
      nlohmann::json j;
      if (input.empty() || input == "-") {
        j = nlohmann::json::parse(std::cin);
      } else {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open '" + input + "'");
        j = nlohmann::json::parse(in);
      }
      const auto records = records_from_json(j);
      write_output(output, render(records, parse_report_format(format_text)));
      write_status_summary(records, std::cerr);
    } else if (*monotone) {
      const Graph g = load_graph(input);
      OracleBudget budget = default_oracle_budget();
      budget.per_instance = budget_from(time_cap_ms, -1);
      const auto records = run_monotonicity_check(g, m_max, budget);
      std::cout << render(records, parse_report_format(format_text));
      write_status_summary(records, std::cerr);
    } else if (*consistency) {
      std::cout << "family,k,m,recurrence,closed_form,status\n";
      int disagreements = 0;
      for (const auto& row : recurrence_consistency(k_max)) {
        std::cout << family_name(row.family) << ',' << row.k << ',' << row.m << ','
                  << to_string(row.recurrence) << ',' << to_string(row.closed_form) << ','
                  << (row.agree() ? "AGREE" : "DISAGREE") << '\n';
        if (!row.agree()) ++disagreements;
      }
      std::cerr << "DISAGREE=" << disagreements << '\n';
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << " (lower bound " << e.lower_bound();
    if (e.upper_bound()) std::cerr << ", upper bound " << *e.upper_bound();
    std::cerr << ")\n";
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
