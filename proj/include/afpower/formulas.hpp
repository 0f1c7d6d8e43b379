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

// Closed-form anti-forcing values for powers of the graph families.
//
// Each evaluator returns the literal value of the closed-form formula together
// with the case it used and whether (k, m) lies inside the domain where the
// formula's derivation is valid. Values outside that domain are still
// computed so they can be reported, but they are never graded.
//
// For odd-order graphs there is no perfect matching and af(G) = |E(G)|, so
// those formulas are edge counts (FormulaKind::kEdgeCount).

#ifndef AFPOWER_FORMULAS_HPP_
#define AFPOWER_FORMULAS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "afpower/generators.hpp"

namespace afpower {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class FormulaKind { kExact, kLowerBound, kUpperBound, kBounds, kEdgeCount };
enum class Applicability { kInRange, kOutOfRange };

inline constexpr std::string_view kind_name(FormulaKind k) {
  switch (k) {
    case FormulaKind::kExact: return "exact";
    case FormulaKind::kLowerBound: return "lower_bound";
    case FormulaKind::kUpperBound: return "upper_bound";
    case FormulaKind::kBounds: return "bounds";
    case FormulaKind::kEdgeCount: return "edge_count";
  }
  return "unknown";
}

inline constexpr std::string_view applicability_name(Applicability a) {
  return a == Applicability::kInRange ? "in_range" : "out_of_range";
}

struct BoundPair {
  Rational lower;
  Rational upper;
};

struct FormulaResult {
  FormulaKind kind = FormulaKind::kExact;
  std::optional<Rational> value;  // point-valued kinds
  std::optional<BoundPair> bounds;  // kBounds
  std::string case_label;
  Applicability applicability = Applicability::kInRange;
  // Independent closed form, where the source gives both a recurrence and
  // its solution. `value` always holds the recurrence.
  std::optional<Rational> closed_form;

  bool in_range() const { return applicability == Applicability::kInRange; }
  bool is_point() const { return value.has_value(); }
};

namespace detail {

inline void require_formula(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

inline FormulaResult point(FormulaKind kind, std::int64_t v, std::string label,
                           Applicability a = Applicability::kInRange) {
  FormulaResult r;
  r.kind = kind;
  r.value = Rational(v);
  r.case_label = std::move(label);
  r.applicability = a;
  return r;
}

struct PathCase {
  std::int64_t value;
  std::string label;
};

// Even order k >= 1, m >= 2.
inline PathCase path_theorem(std::int64_t k, std::int64_t m) {
  if (k > 2 * m) {
    const std::int64_t blocks = k / (2 * m);
    const std::int64_t rest = k - 2 * m * blocks;
    const std::int64_t tail = rest == 0 ? 0 : path_theorem(rest, m).value;
    return {blocks * m * (m - 1) + tail, "iii"};
  }
  const std::int64_t base = (k - m) * (m - 1);
  const std::int64_t unsaturated = 2 * m - k - 1;
  if (k == 2 * m || unsaturated < 2) return {base, "i"};
  std::int64_t extra = 0;
  for (std::int64_t i = 1; i <= unsaturated / 2; ++i) extra += 2 * m - k - 2 * i;
  return {base + extra, "ii"};
}

}  // namespace detail

// af(P_k^m).
inline FormulaResult af_path_power(int k, int m) {
  detail::require_formula(k >= 1 && m >= 1, "path formula requires k >= 1 and m >= 1");
  const std::int64_t kk = k;
  const std::int64_t mm = m;
  if (k % 2 != 0) {
    if (mm < kk - 1) {
      return detail::point(FormulaKind::kEdgeCount, mm * kk - mm * (mm + 1) / 2,
                           "odd-edge-count");
    }
    return detail::point(FormulaKind::kEdgeCount, kk * (kk - 1) / 2, "odd-complete");
  }
  if (m == 1) return detail::point(FormulaKind::kExact, 0, "m=1");
  const detail::PathCase c = detail::path_theorem(kk, mm);
  return detail::point(FormulaKind::kExact, c.value, c.label,
                       m <= k ? Applicability::kInRange : Applicability::kOutOfRange);
}

// Bounds on af(C_k^m) for even k; exact edge counts for odd k.
inline FormulaResult af_cycle_power_bounds(int k, int m) {
  detail::require_formula(k >= 3 && m >= 1, "cycle formula requires k >= 3 and m >= 1");
  const std::int64_t kk = k;
  const std::int64_t mm = m;
  if (k % 2 != 0) {
    if (mm < kk / 2) return detail::point(FormulaKind::kEdgeCount, mm * kk, "odd-edge-count");
    return detail::point(FormulaKind::kEdgeCount, kk * (kk / 2), "odd-complete");
  }
  // Deleting one cycle edge leaves a path with a unique perfect matching.
  if (m == 1) return detail::point(FormulaKind::kExact, 1, "m=1");
  FormulaResult r;
  r.kind = FormulaKind::kBounds;
  r.bounds = BoundPair{Rational(kk + 8, 4), Rational(kk * (kk - 2), 4)};
  r.case_label = "bounds";
  return r;
}

// af(F_k^m): F_k has odd order, so af is the edge count.
inline FormulaResult af_friendship_power(int k, int m) {
  detail::require_formula(k >= 1 && m >= 1, "friendship formula requires k >= 1 and m >= 1");
  const std::int64_t kk = k;
  if (m == 1) return detail::point(FormulaKind::kEdgeCount, 3 * kk, "m=1");
  return detail::point(FormulaKind::kEdgeCount, 2 * kk * kk + kk, "complete-power");
}

// af(T_k^m) = |E(T_k^m)|.
inline FormulaResult af_triangular_chain_power(int k, int m) {
  detail::require_formula(k >= 1 && m >= 1,
                          "triangular chain formula requires k >= 1 and m >= 1");
  const std::int64_t kk = k;
  const std::int64_t mm = m;
  if (m == 1) return detail::point(FormulaKind::kEdgeCount, 3 * kk, "m=1");
  const std::int64_t value = 4 * kk * mm - kk - 2 * mm * mm + 2 * mm;
  if (m <= k) return detail::point(FormulaKind::kEdgeCount, value, "edge-count");
  const std::int64_t complete_edges = (2 * kk + 1) * (2 * kk) / 2;
  return detail::point(FormulaKind::kEdgeCount, value,
                       "out-of-range (complete graph has " +
                           std::to_string(complete_edges) + " edges)",
                       Applicability::kOutOfRange);
}

// Ortho-chain square cactus O_k, even k.
inline FormulaResult af_ortho_power(int k, int m) {
  detail::require_formula(k >= 2 && m >= 1, "ortho formula requires k >= 2 and m >= 1");
  if (k % 2 != 0) throw std::invalid_argument("ortho formula requires even k");
  const std::int64_t kk = k;
  const std::int64_t mm = m;
  const Applicability range =
      m <= k + 1 ? Applicability::kInRange : Applicability::kOutOfRange;
  if (m == 1) return detail::point(FormulaKind::kEdgeCount, 4 * kk, "m=1");
  if (m == 2) return detail::point(FormulaKind::kEdgeCount, 10 * kk - 4, "base-m2", range);
  std::int64_t value = 18 * kk - 16;
  if (m == 3) return detail::point(FormulaKind::kEdgeCount, value, "base-m3", range);
  for (std::int64_t j = 4; j <= mm; ++j) value += 9 * (kk - j) + 15;
  FormulaResult r = detail::point(FormulaKind::kEdgeCount, value, "recurrence", range);
  r.closed_form = Rational(9 * kk * (mm - 1)) - Rational(mm - 3, 2) * (9 * mm + 6) - 16;
  return r;
}

// Para-chain square cactus Q_k, even k.
inline FormulaResult af_para_power(int k, int m) {
  detail::require_formula(k >= 2 && m >= 1, "para formula requires k >= 2 and m >= 1");
  if (k % 2 != 0) throw std::invalid_argument("para formula requires even k");
  const std::int64_t kk = k;
  const std::int64_t mm = m;
  const Applicability range =
      m / 2 <= k ? Applicability::kInRange : Applicability::kOutOfRange;
  if (m == 1) return detail::point(FormulaKind::kEdgeCount, 4 * kk, "m=1");
  std::int64_t value = 10 * kk - 4;
  if (m == 2) return detail::point(FormulaKind::kEdgeCount, value, "base-m2", range);
  for (std::int64_t j = 3; j <= mm; ++j) {
    value += j % 2 == 0 ? 5 * (kk - j / 2) + 1 : 4 * (kk - j / 2);
  }
  FormulaResult r = detail::point(FormulaKind::kEdgeCount, value,
                                  m % 2 == 0 ? "recurrence-even" : "recurrence-odd", range);
  if (m % 2 == 0) {
    r.closed_form = Rational(9 * mm + 2, 2) * kk - Rational(mm - 2, 8) * (9 * mm + 16) - 4;
  } else {
    r.closed_form = Rational(9 * mm + 1, 2) * kk - Rational(mm - 1, 8) * (9 * mm - 11) - 4;
  }
  return r;
}

// Whether the family has a formula at all for this k (ortho/para need even k).
inline bool formula_accepts(Family f, int k) {
  if (k < family_min_k(f)) return false;
  switch (f) {
    case Family::kOrthoChain:
    case Family::kParaChain: return k >= 2 && k % 2 == 0;
    default: return true;
  }
}

// Dispatch by family; nullopt for families without a formula.
inline std::optional<FormulaResult> evaluate_formula(Family f, int k, int m) {
  switch (f) {
    case Family::kPath: return af_path_power(k, m);
    case Family::kCycle: return af_cycle_power_bounds(k, m);
    case Family::kFriendship: return af_friendship_power(k, m);
    case Family::kTriangularChain: return af_triangular_chain_power(k, m);
    case Family::kOrthoChain: return af_ortho_power(k, m);
    case Family::kParaChain: return af_para_power(k, m);
    case Family::kComplete: return std::nullopt;
  }
  return std::nullopt;
}

// One recurrence-versus-closed-form comparison.
struct ConsistencyRow {
  Family family;
  int k;
  int m;
  Rational recurrence;
  Rational closed_form;
  bool agree() const { return recurrence == closed_form; }
};

// Compares the recurrence and closed form of the ortho and para formulas for
// every even k <= k_max and every in-range m that has a closed form.
inline std::vector<ConsistencyRow> recurrence_consistency(int k_max) {
  std::vector<ConsistencyRow> rows;
  for (Family f : {Family::kOrthoChain, Family::kParaChain}) {
    for (int k = 2; k <= k_max; k += 2) {
      for (int m = 3;; ++m) {
        const FormulaResult r = *evaluate_formula(f, k, m);
        if (!r.in_range()) break;
        if (r.closed_form) rows.push_back({f, k, m, *r.value, *r.closed_form});
      }
    }
  }
  return rows;
}

}  // namespace afpower

#endif  // AFPOWER_FORMULAS_HPP_
