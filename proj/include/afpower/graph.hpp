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

#ifndef AFPOWER_GRAPH_HPP_
#define AFPOWER_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace afpower {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool has(Vertex w) const { return u == w || v == w; }
  constexpr Vertex other(Vertex w) const { return w == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the dense vertex set {0, ..., n-1}.
//
// The edge list is kept sorted and duplicate-free, so two graphs compare
// equal exactly when they have the same order, edge set and labels.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<Edge> edges = {},
                 std::vector<std::string> labels = {})
      : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("graph order must be non-negative");
    for (const Edge& e : edges_) {
      if (e.u < 0 || e.v >= n_) {
        throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) +
                                    "} has an endpoint outside the vertex set");
      }
      if (e.u == e.v) {
        throw std::invalid_argument("self-loop at vertex " +
                                    std::to_string(e.u));
      }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    if (!labels_.empty()) {
      if (static_cast<int>(labels_.size()) != n_) {
        throw std::invalid_argument("label map must cover every vertex");
      }
      std::unordered_set<std::string> seen;
      for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
          throw std::invalid_argument("duplicate vertex label '" + l + "'");
        }
      }
    }
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // Position of e in edges(), if present.
  std::optional<std::size_t> edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Family label of v, or its decimal index when the graph is unlabeled.
  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
  }

  std::optional<Vertex> find_label(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  // Same vertex set and labels, with the given edges removed.
  Graph without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_) {
      if (std::find(removed.begin(), removed.end(), e) == removed.end()) {
        kept.push_back(e);
      }
    }
    return Graph(n_, std::move(kept), labels_);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

// All-pairs hop counts. Entries are kUnreachable across components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistanceMatrix(int n)
      : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  bool reachable(Vertex u, Vertex v) const {
    return dist_[index(u, v)] != kUnreachable;
  }
  void set(Vertex u, Vertex v, int d) { dist_[index(u, v)] = d; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_;
  std::vector<int> dist_;
};

// BFS from every vertex.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), DistanceMatrix::kUnreachable);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == DistanceMatrix::kUnreachable) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex t = 0; t < n; ++t) dm.set(s, t, dist[t]);
  }
  return dm;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const DistanceMatrix dm = all_pairs_distances(g);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (!dm.reachable(0, v)) return false;
  }
  return true;
}

// Largest finite distance; nullopt when g is disconnected.
inline std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  const DistanceMatrix dm = all_pairs_distances(g);
  int best = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!dm.reachable(u, v)) return std::nullopt;
      best = std::max(best, dm(u, v));
    }
  }
  return best;
}

// The m-th power: u ~ v iff 1 <= d_G(u, v) <= m. Unreachable pairs never
// become adjacent.
inline Graph power(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("graph power requires m >= 1");
  if (m == 1) return g;
  const int n = g.order();
  const DistanceMatrix dm = all_pairs_distances(g);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = dm(u, v);
      if (d != DistanceMatrix::kUnreachable && d <= m) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges), g.labels());
}

inline bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace afpower

#endif  // AFPOWER_GRAPH_HPP_
