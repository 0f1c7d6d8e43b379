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

// Perfect-matching machinery: maximum matching, enumeration and counting of
// perfect matchings, uniqueness tests, and M-alternating cycles.

#ifndef AFPOWER_MATCHING_HPP_
#define AFPOWER_MATCHING_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "afpower/edge_set.hpp"
#include "afpower/graph.hpp"

namespace afpower {

// A set of edges, kept sorted. Disjointness is not enforced on
// construction; use is_matching() / validate_perfect_matching().
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  // Partner of every vertex in [0, n), or -1 when unsaturated.
  std::vector<Vertex> mates(int n) const {
    std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
    for (const Edge& e : edges_) {
      mate.at(e.u) = e.v;
      mate.at(e.v) = e.u;
    }
    return mate;
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching& a, const Matching& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  std::vector<Edge> edges_;
};

inline bool is_matching(const Matching& m) {
  std::vector<Vertex> seen;
  for (const Edge& e : m.edges()) {
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

inline bool is_perfect_matching(const Graph& g, const Matching& m) {
  if (!is_matching(m)) return false;
  if (2 * m.size() != static_cast<std::size_t>(g.order())) return false;
  return std::all_of(m.edges().begin(), m.edges().end(),
                     [&](const Edge& e) { return g.has_edge(e); });
}

inline void validate_perfect_matching(const Graph& g, const Matching& m) {
  if (!is_perfect_matching(g, m)) {
    throw std::invalid_argument("edge set is not a perfect matching of the graph");
  }
}

inline Matching matching_from_mates(std::span<const Vertex> mate) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v) {
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  }
  return Matching(std::move(edges));
}

// Edmonds' blossom algorithm, O(n^3).
inline Matching maximum_matching(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> match(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> base(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n));
  std::vector<char> in_blossom(static_cast<std::size_t>(n));
  std::deque<Vertex> queue;

  auto lca = [&](Vertex a, Vertex b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    while (true) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](Vertex v, Vertex b, Vertex child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_augmenting_path = [&](Vertex root) -> Vertex {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (Vertex i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    queue.assign(1, root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          const Vertex cur = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (match[root] != -1) continue;
    Vertex v = find_augmenting_path(root);
    while (v != -1) {
      const Vertex pv = parent[v];
      const Vertex next = match[pv];
      match[v] = pv;
      match[pv] = v;
      v = next;
    }
  }
  return matching_from_mates(match);
}

inline bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return 2 * maximum_matching(g).size() == static_cast<std::size_t>(g.order());
}

namespace detail {

// Depth-first enumeration of perfect matchings over bitmask adjacency.
// Branches on the lowest unsaturated vertex and tries partners in increasing
// index order, which yields matchings in lexicographic order of their sorted
// edge lists. `visit(mate)` returns false to stop early.
template <typename Visit>
class PerfectMatchingWalker {
 public:
  PerfectMatchingWalker(std::span<const VertexMask> adj, Visit& visit)
      : adj_(adj), visit_(visit), mate_(adj.size(), -1) {}

  // Returns false if the visitor stopped the walk.
  bool run() {
    const int n = static_cast<int>(adj_.size());
    if (n % 2 != 0) return true;
    const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    return descend(all);
  }

 private:
  bool descend(VertexMask free) {
    if (free == 0) return visit_(std::span<const Vertex>(mate_));
    // Every unsaturated vertex needs an unsaturated neighbour.
    for (VertexMask rest = free; rest != 0; rest &= rest - 1) {
      if ((adj_[std::countr_zero(rest)] & free) == 0) return true;
    }
    const Vertex u = std::countr_zero(free);
    for (VertexMask cand = adj_[u] & free; cand != 0; cand &= cand - 1) {
      const Vertex v = std::countr_zero(cand);
      mate_[u] = v;
      mate_[v] = u;
      const bool go_on =
          descend(free & ~(VertexMask{1} << u) & ~(VertexMask{1} << v));
      mate_[u] = mate_[v] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  std::span<const VertexMask> adj_;
  Visit& visit_;
  std::vector<Vertex> mate_;
};

template <typename Visit>
bool walk_perfect_matchings(std::span<const VertexMask> adj, Visit&& visit) {
  PerfectMatchingWalker<std::remove_reference_t<Visit>> walker(adj, visit);
  return walker.run();
}

// Counts perfect matchings, stopping once `cap` is reached (0 = no cap).
inline std::uint64_t count_perfect_matchings_masks(std::span<const VertexMask> adj,
                                                   std::uint64_t cap = 0) {
  std::uint64_t count = 0;
  walk_perfect_matchings(adj, [&](std::span<const Vertex>) {
    ++count;
    return cap == 0 || count < cap;
  });
  return count;
}

// Simple M-alternating cycles, each reported once as a vertex sequence that
// starts at its smallest vertex and leaves it along its matched edge.
template <typename Visit>
void walk_alternating_cycles(std::span<const VertexMask> adj,
                             std::span<const Vertex> mate, Visit&& visit) {
  const int n = static_cast<int>(adj.size());
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    if (mate[s] < s) continue;
    const VertexMask above = ~((VertexMask{2} << s) - 1);  // vertices > s
    seq.assign({s, mate[s]});
    VertexMask used = (VertexMask{1} << s) | (VertexMask{1} << mate[s]);

    // Explicit stack of remaining candidate masks, one frame per matched pair.
    std::vector<VertexMask> frames;
    auto candidates = [&](Vertex cur) {
      return adj[cur] & ~(VertexMask{1} << mate[cur]) &
             ((above & ~used) | (VertexMask{1} << s));
    };
    frames.push_back(candidates(mate[s]));
    bool stop = false;
    while (!frames.empty() && !stop) {
      VertexMask& cand = frames.back();
      if (cand == 0) {
        frames.pop_back();
        if (seq.size() > 2) {
          used &= ~(VertexMask{1} << seq.back());
          seq.pop_back();
          used &= ~(VertexMask{1} << seq.back());
          seq.pop_back();
        }
        continue;
      }
      const Vertex w = std::countr_zero(cand);
      cand &= cand - 1;
      if (w == s) {
        if (!visit(std::span<const Vertex>(seq))) stop = true;
        continue;
      }
      const Vertex w2 = mate[w];
      if (w2 < s || (used >> w2 & 1) != 0) continue;
      seq.push_back(w);
      seq.push_back(w2);
      used |= (VertexMask{1} << w) | (VertexMask{1} << w2);
      frames.push_back(candidates(w2));
    }
    if (stop) return;
  }
}

}  // namespace detail

// All perfect matchings in lexicographic order, truncated after `cap`.
inline std::vector<Matching> enumerate_perfect_matchings(
    const Graph& g, std::optional<std::size_t> cap = std::nullopt) {
  std::vector<Matching> out;
  if (cap && *cap == 0) return out;
  const MaskGraph mg(g);
  detail::walk_perfect_matchings(mg.adjacency(), [&](std::span<const Vertex> mate) {
    out.push_back(matching_from_mates(mate));
    return !cap || out.size() < *cap;
  });
  return out;
}

inline std::uint64_t count_perfect_matchings(const Graph& g) {
  const MaskGraph mg(g);
  return detail::count_perfect_matchings_masks(mg.adjacency());
}

// Stops as soon as a second perfect matching is found.
inline bool has_unique_perfect_matching(const Graph& g) {
  const MaskGraph mg(g);
  return detail::count_perfect_matchings_masks(mg.adjacency(), 2) == 1;
}

// Even cycle whose edges alternate between a perfect matching M and E \ M.
// `vertices` starts at the smallest vertex and runs in the direction whose
// second vertex is smaller; edge i joins vertices[i] and vertices[i+1 mod L].
class AlternatingCycle {
 public:
  AlternatingCycle(std::vector<Vertex> vertices, bool first_edge_matched)
      : vertices_(std::move(vertices)), first_edge_matched_(first_edge_matched) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    }
    return out;
  }
  std::vector<Edge> matched_edges() const { return every_other(first_edge_matched_ ? 0 : 1); }
  std::vector<Edge> free_edges() const { return every_other(first_edge_matched_ ? 1 : 0); }

  friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;

 private:
  std::vector<Edge> every_other(std::size_t offset) const {
    std::vector<Edge> out;
    for (std::size_t i = offset; i < vertices_.size(); i += 2) {
      out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Vertex> vertices_;
  bool first_edge_matched_;
};

inline std::vector<AlternatingCycle> alternating_cycles(const Graph& g,
                                                        const Matching& m) {
  validate_perfect_matching(g, m);
  const MaskGraph mg(g);
  const std::vector<Vertex> mate = m.mates(g.order());
  std::vector<AlternatingCycle> out;
  detail::walk_alternating_cycles(
      mg.adjacency(), mate, [&](std::span<const Vertex> seq) {
        std::vector<Vertex> cyc(seq.begin(), seq.end());
        bool matched_first = true;
        if (cyc.back() < cyc[1]) {
          std::reverse(cyc.begin() + 1, cyc.end());
          matched_first = false;
        }
        out.emplace_back(std::move(cyc), matched_first);
        return true;
      });
  return out;
}

}  // namespace afpower

#endif  // AFPOWER_MATCHING_HPP_
