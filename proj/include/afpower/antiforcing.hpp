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

// Exact anti-forcing and forcing numbers.
//
// Two independent solvers compute af(G):
//
//  * af_subset_search works from the definition. It deepens over the size d
//    of the deleted set S and asks whether some S of size d leaves G - S with
//    exactly one perfect matching. Every candidate is checked by enumerating
//    the perfect matchings of G - S; a second matching M' found there is a
//    constraint S must break, and the search branches on its edges.
//
//  * af_via_matchings takes the minimum of af(G, M) over all perfect
//    matchings M, where af(G, M) is a minimum set of non-M edges meeting every
//    M-alternating cycle (exact branch and bound).
//
// A graph without a perfect matching has af(G) = |E(G)| by convention; such
// results carry Method::kConventionNoPerfectMatching and an empty witness.

#ifndef AFPOWER_ANTIFORCING_HPP_
#define AFPOWER_ANTIFORCING_HPP_

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "afpower/budget.hpp"
#include "afpower/edge_set.hpp"
#include "afpower/graph.hpp"
#include "afpower/matching.hpp"

namespace afpower {

enum class Method { kSubsetSearch, kViaMatchings, kConventionNoPerfectMatching };

inline constexpr std::string_view method_name(Method m) {
  switch (m) {
    case Method::kSubsetSearch: return "subset_search";
    case Method::kViaMatchings: return "via_matchings";
    case Method::kConventionNoPerfectMatching: return "convention_no_pm";
  }
  return "unknown";
}

struct AntiForcingResult {
  int value = 0;
  std::vector<Edge> witness;
  Method method = Method::kSubsetSearch;
};

// Minimum edge set meeting every set of some family.
struct HittingSolution {
  int size = 0;
  std::vector<Edge> edges;
};

struct MatchingAnalysis {
  Matching matching;
  int af_of_m = 0;
  int f_of_m = 0;
  std::vector<Edge> af_witness;
  std::vector<Edge> f_witness;
};

inline bool is_anti_forcing_set(const Graph& g, std::span<const Edge> s) {
  const MaskGraph mg(g);
  const EdgeSet removed = mg.to_set(s);
  return detail::count_perfect_matchings_masks(mg.adjacency_without(removed), 2) == 1;
}

namespace detail {

inline AntiForcingResult no_matching_result(const Graph& g) {
  return {static_cast<int>(g.size()), {}, Method::kConventionNoPerfectMatching};
}

// Size of a greedy packing of pairwise disjoint sets, each restricted to
// `allowed`. Any hitting set needs at least this many elements.
inline int disjoint_packing_bound(std::span<const EdgeSet> sets,
                                  std::span<const int> order,
                                  const EdgeSet& allowed) {
  EdgeSet used;
  int packed = 0;
  for (int idx : order) {
    const EdgeSet avail = sets[idx] & allowed;
    if (!avail.intersects(used)) {
      used |= avail;
      ++packed;
    }
  }
  return packed;
}

// Exact minimum hitting set by branch and bound. Branches on the un-hit set
// with the fewest admissible elements; each branch takes one of its elements
// and excludes the ones tried before it. Pruned with the packing bound.
class HittingSetSolver {
 public:
  HittingSetSolver(std::vector<EdgeSet> sets, BudgetMeter& meter)
      : meter_(meter) {
    // Keep only inclusion-minimal sets; a superset is hit whenever its
    // subset is.
    std::sort(sets.begin(), sets.end(), [](const EdgeSet& a, const EdgeSet& b) {
      const int ca = a.count();
      const int cb = b.count();
      return ca != cb ? ca < cb : lex_less(a, b);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (const EdgeSet& s : sets) {
      const bool dominated = std::any_of(
          sets_.begin(), sets_.end(), [&](const EdgeSet& kept) { return kept.is_subset_of(s); });
      if (!dominated) sets_.push_back(s);
    }
  }

  const std::vector<EdgeSet>& sets() const { return sets_; }

  int lower_bound() const {
    std::vector<int> order(sets_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    EdgeSet all;
    for (const EdgeSet& s : sets_) all |= s;
    return disjoint_packing_bound(sets_, order, all);
  }

  // Smallest hitting set of size < `cutoff`, if one exists.
  std::optional<EdgeSet> solve(int cutoff) {
    best_size_ = cutoff;
    best_.reset();
    for (const EdgeSet& s : sets_) {
      if (s.none()) return std::nullopt;
      universe_ |= s;
    }
    branch(EdgeSet{}, 0, EdgeSet{});
    return best_;
  }

 private:
  void branch(const EdgeSet& chosen, int chosen_count, const EdgeSet& excluded) {
    meter_.tick();
    const EdgeSet allowed = universe_.minus(excluded);
    std::vector<int> open;
    int pick = -1;
    int pick_size = std::numeric_limits<int>::max();
    for (int i = 0; i < static_cast<int>(sets_.size()); ++i) {
      if (sets_[i].intersects(chosen)) continue;
      const int avail = (sets_[i] & allowed).count();
      if (avail == 0) return;
      open.push_back(i);
      if (avail < pick_size) {
        pick_size = avail;
        pick = i;
      }
    }
    if (open.empty()) {
      if (chosen_count < best_size_) {
        best_size_ = chosen_count;
        best_ = chosen;
      }
      return;
    }
    if (chosen_count + 1 >= best_size_) return;
    if (chosen_count + disjoint_packing_bound(sets_, open, allowed) >= best_size_) return;

    EdgeSet tried = excluded;
    const EdgeSet choices = sets_[pick] & allowed;
    for (int e = choices.first(); e != -1; e = choices.next(e)) {
      EdgeSet next = chosen;
      next.set(e);
      branch(next, chosen_count + 1, tried);
      tried.set(e);
      if (chosen_count + 1 >= best_size_) return;
    }
  }

  BudgetMeter& meter_;
  std::vector<EdgeSet> sets_;
  EdgeSet universe_;
  int best_size_ = 0;
  std::optional<EdgeSet> best_;
};

enum class CycleSide { kFree, kMatched };

// One EdgeSet per M-alternating cycle, holding its free or matched edges.
inline std::vector<EdgeSet> alternating_cycle_sets(const MaskGraph& mg,
                                                   std::span<const Vertex> mate,
                                                   CycleSide side,
                                                   BudgetMeter& meter) {
  std::vector<EdgeSet> out;
  walk_alternating_cycles(mg.adjacency(), mate, [&](std::span<const Vertex> seq) {
    meter.tick();
    EdgeSet s;
    const std::size_t len = seq.size();
    // seq[0]-seq[1] is matched, so odd positions start free edges.
    const std::size_t offset = side == CycleSide::kMatched ? 0 : 1;
    for (std::size_t i = offset; i < len; i += 2) {
      s.set(mg.edge_id(seq[i], seq[(i + 1) % len]));
    }
    out.push_back(s);
    return true;
  });
  return out;
}

inline std::vector<std::vector<Vertex>> perfect_matching_mates(const MaskGraph& mg,
                                                               BudgetMeter& meter) {
  std::vector<std::vector<Vertex>> out;
  walk_perfect_matchings(mg.adjacency(), [&](std::span<const Vertex> mate) {
    meter.tick();
    out.emplace_back(mate.begin(), mate.end());
    return true;
  });
  return out;
}

inline HittingSolution solve_cycle_hitting(const MaskGraph& mg,
                                           std::span<const Vertex> mate,
                                           CycleSide side, BudgetMeter& meter) {
  HittingSetSolver solver(alternating_cycle_sets(mg, mate, side, meter), meter);
  const auto best = solver.solve(mg.size() + 1);
  if (!best) throw std::logic_error("alternating cycle without a hitting edge");
  return {best->count(), mg.to_edges(*best)};
}

}  // namespace detail

// af(G, M): fewest non-M edges whose deletion leaves M as the only perfect
// matching.
inline HittingSolution af_of_matching(const Graph& g, const Matching& m,
                                      const Budget& budget = Budget::unlimited()) {
  validate_perfect_matching(g, m);
  const MaskGraph mg(g);
  detail::BudgetMeter meter(budget);
  try {
    return detail::solve_cycle_hitting(mg, m.mates(g.order()), detail::CycleSide::kFree,
                                       meter);
  } catch (const detail::OutOfBudget&) {
    throw BudgetExceeded("af(G, M) budget exhausted", 0, std::nullopt);
  }
}

// f(G, M): fewest M edges meeting every M-alternating cycle.
inline HittingSolution forcing_of_matching(const Graph& g, const Matching& m,
                                           const Budget& budget = Budget::unlimited()) {
  validate_perfect_matching(g, m);
  const MaskGraph mg(g);
  detail::BudgetMeter meter(budget);
  try {
    return detail::solve_cycle_hitting(mg, m.mates(g.order()),
                                       detail::CycleSide::kMatched, meter);
  } catch (const detail::OutOfBudget&) {
    throw BudgetExceeded("f(G, M) budget exhausted", 0, std::nullopt);
  }
}

inline MatchingAnalysis analyze_matching(const Graph& g, const Matching& m,
                                         const Budget& budget = Budget::unlimited()) {
  HittingSolution af = af_of_matching(g, m, budget);
  HittingSolution f = forcing_of_matching(g, m, budget);
  return {m, af.size, f.size, std::move(af.edges), std::move(f.edges)};
}

inline AntiForcingResult af_via_matchings(const Graph& g,
                                          const Budget& budget = Budget::unlimited()) {
  if (!has_perfect_matching(g)) return detail::no_matching_result(g);
  const MaskGraph mg(g);
  detail::BudgetMeter meter(budget);
  int best_size = mg.size() + 1;
  EdgeSet best;
  try {
    detail::walk_perfect_matchings(mg.adjacency(), [&](std::span<const Vertex> mate) {
      meter.tick();
      detail::HittingSetSolver solver(
          detail::alternating_cycle_sets(mg, mate, detail::CycleSide::kFree, meter),
          meter);
      if (solver.lower_bound() >= best_size) return true;
      if (auto found = solver.solve(best_size)) {
        best_size = found->count();
        best = *found;
      }
      return best_size > 0;
    });
  } catch (const detail::OutOfBudget&) {
    std::optional<int> upper;
    if (best_size <= mg.size()) upper = best_size;
    throw BudgetExceeded("af_via_matchings budget exhausted", 0, upper);
  }
  return {best_size, mg.to_edges(best), Method::kViaMatchings};
}

namespace detail {

// Iterative-deepening search for a deletion set S of size exactly `depth`
// that leaves `mate` as the unique perfect matching of G - S. Constraints
// discovered along the way (edge sets of rival matchings) are kept in
// `pool` and reused at later depths.
class SubsetSearch {
 public:
  SubsetSearch(const MaskGraph& mg, std::span<const Vertex> mate,
               std::vector<EdgeSet>& pool, BudgetMeter& meter)
      : mg_(mg), mate_(mate), pool_(pool), meter_(meter) {
    for (Vertex v = 0; v < mg.order(); ++v) {
      if (mate[v] > v) matched_.set(mg.edge_id(v, mate[v]));
    }
    free_ = mg.all_edges().minus(matched_);
  }

  // Packing bound of the constraints collected so far.
  int pool_bound() const {
    std::vector<int> order(pool_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pool_[a].count() < pool_[b].count(); });
    return disjoint_packing_bound(pool_, order, free_);
  }

  std::optional<EdgeSet> run(int depth) {
    depth_ = depth;
    found_.reset();
    descend(EdgeSet{}, 0, EdgeSet{});
    return found_;
  }

 private:
  bool descend(const EdgeSet& chosen, int chosen_count, const EdgeSet& excluded) {
    meter_.tick();
    const std::vector<VertexMask> residual = mg_.adjacency_without(chosen);
    std::optional<EdgeSet> rival;
    int seen = 0;
    walk_perfect_matchings(residual, [&](std::span<const Vertex> mate) {
      ++seen;
      if (!std::equal(mate.begin(), mate.end(), mate_.begin())) {
        EdgeSet s;
        for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v) {
          if (mate[v] > v) s.set(mg_.edge_id(v, mate[v]));
        }
        rival = s.minus(matched_);
      }
      return !rival.has_value();
    });
    if (seen == 1 && !rival) {
      found_ = chosen;
      return true;
    }
    if (std::find(pool_.begin(), pool_.end(), *rival) == pool_.end()) {
      pool_.push_back(*rival);
    }
    if (chosen_count == depth_) return false;

    const EdgeSet allowed = free_.minus(excluded);
    // Open constraints bucketed by how many admissible edges remain, so the
    // packing bound sees the tightest ones first.
    auto& buckets = buckets_;
    for (auto& b : buckets) b.clear();
    int pick = -1;
    for (int i = 0; i < static_cast<int>(pool_.size()); ++i) {
      if (pool_[i].intersects(chosen)) continue;
      const int avail = (pool_[i] & allowed).count();
      if (avail == 0) return false;
      if (static_cast<std::size_t>(avail) >= buckets.size()) buckets.resize(avail + 1);
      buckets[avail].push_back(i);
    }
    std::vector<int> open;
    for (const auto& b : buckets) {
      if (pick == -1 && !b.empty()) pick = b.front();
      open.insert(open.end(), b.begin(), b.end());
    }
    if (chosen_count + disjoint_packing_bound(pool_, open, allowed) > depth_) {
      return false;
    }

    EdgeSet tried = excluded;
    const EdgeSet choices = pool_[pick] & allowed;
    for (int e = choices.first(); e != -1; e = choices.next(e)) {
      EdgeSet next = chosen;
      next.set(e);
      if (descend(next, chosen_count + 1, tried)) return true;
      tried.set(e);
    }
    return false;
  }

  const MaskGraph& mg_;
  std::span<const Vertex> mate_;
  std::vector<EdgeSet>& pool_;
  BudgetMeter& meter_;
  EdgeSet matched_;
  EdgeSet free_;
  int depth_ = 0;
  std::optional<EdgeSet> found_;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace detail

inline AntiForcingResult af_subset_search(const Graph& g,
                                          const Budget& budget = Budget::unlimited()) {
  if (!has_perfect_matching(g)) return detail::no_matching_result(g);
  const MaskGraph mg(g);
  detail::BudgetMeter meter(budget);
  int depth = 0;
  try {
    // A minimum anti-forcing set S leaves some perfect matching M of G intact
    // and avoids all of its edges, so it suffices to search per M.
    const auto matchings = detail::perfect_matching_mates(mg, meter);
    std::vector<std::vector<EdgeSet>> pools(matchings.size());
    std::vector<int> refuted_below(matchings.size(), 0);
    for (;; ++depth) {
      for (std::size_t i = 0; i < matchings.size(); ++i) {
        if (refuted_below[i] > depth) continue;
        detail::SubsetSearch search(mg, matchings[i], pools[i], meter);
        if (auto s = search.run(depth)) {
          return {depth, mg.to_edges(*s), Method::kSubsetSearch};
        }
        refuted_below[i] = std::max(depth + 1, search.pool_bound());
      }
    }
  } catch (const detail::OutOfBudget&) {
    throw BudgetExceeded("af_subset_search budget exhausted", depth, std::nullopt);
  }
}

// f(G): minimum of f(G, M) over perfect matchings M.
inline int forcing_number(const Graph& g, const Budget& budget = Budget::unlimited()) {
  if (!has_perfect_matching(g)) {
    throw std::domain_error("forcing number is undefined without a perfect matching");
  }
  const MaskGraph mg(g);
  detail::BudgetMeter meter(budget);
  int best = std::numeric_limits<int>::max();
  try {
    detail::walk_perfect_matchings(mg.adjacency(), [&](std::span<const Vertex> mate) {
      detail::HittingSetSolver solver(
          detail::alternating_cycle_sets(mg, mate, detail::CycleSide::kMatched, meter),
          meter);
      if (solver.lower_bound() >= best) return true;
      if (auto found = solver.solve(best)) best = found->count();
      return best > 0;
    });
  } catch (const detail::OutOfBudget&) {
    throw BudgetExceeded("forcing_number budget exhausted", 0, std::nullopt);
  }
  return best;
}

}  // namespace afpower

#endif  // AFPOWER_ANTIFORCING_HPP_
