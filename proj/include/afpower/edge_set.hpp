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

// Fixed-width bit sets used by the exact solvers: VertexMask over at most
// 64 vertices, EdgeSet over at most 256 edge indices, plus a bitmask view
// of a Graph.

#ifndef AFPOWER_EDGE_SET_HPP_
#define AFPOWER_EDGE_SET_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "afpower/graph.hpp"

namespace afpower {

using VertexMask = std::uint64_t;

inline constexpr int kMaxSolverOrder = 64;
inline constexpr int kMaxSolverEdges = 256;

class EdgeSet {
 public:
  static constexpr int kWords = kMaxSolverEdges / 64;

  constexpr EdgeSet() = default;

  constexpr void set(int i) { words_[i >> 6] |= bit(i); }
  constexpr void reset(int i) { words_[i >> 6] &= ~bit(i); }
  constexpr bool test(int i) const { return (words_[i >> 6] & bit(i)) != 0; }

  constexpr bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  constexpr bool none() const { return !any(); }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest set bit, or -1.
  constexpr int first() const {
    for (int i = 0; i < kWords; ++i) {
      if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
    }
    return -1;
  }

  // Index of the lowest set bit above `after`, or -1.
  constexpr int next(int after) const {
    int i = after + 1;
    if (i >= kMaxSolverEdges) return -1;
    int w = i >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur != 0) return w * 64 + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  constexpr bool intersects(const EdgeSet& o) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }

  constexpr bool is_subset_of(const EdgeSet& o) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

  constexpr EdgeSet& operator|=(const EdgeSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr EdgeSet& operator&=(const EdgeSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr EdgeSet minus(const EdgeSet& o) const {
    EdgeSet r = *this;
    for (int i = 0; i < kWords; ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  friend constexpr EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend constexpr EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

  friend constexpr bool operator==(const EdgeSet&, const EdgeSet&) = default;

  // Ordering by the sorted list of member indices.
  friend constexpr bool lex_less(const EdgeSet& a, const EdgeSet& b) {
    int x = a.first();
    int y = b.first();
    while (x != -1 && y != -1) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x == -1 && y != -1;
  }

  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (int i = first(); i != -1; i = next(i)) fn(i);
  }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

// Bitmask adjacency plus an edge-index lookup table for one Graph.
class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g) : n_(g.order()) {
    if (n_ > kMaxSolverOrder) {
      throw std::length_error("exact solvers support at most " +
                              std::to_string(kMaxSolverOrder) + " vertices");
    }
    if (g.size() > static_cast<std::size_t>(kMaxSolverEdges)) {
      throw std::length_error("exact solvers support at most " +
                              std::to_string(kMaxSolverEdges) + " edges");
    }
    edges_.assign(g.edges().begin(), g.edges().end());
    adj_.assign(static_cast<std::size_t>(n_), 0);
    edge_id_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      adj_[e.u] |= VertexMask{1} << e.v;
      adj_[e.v] |= VertexMask{1} << e.u;
      edge_id_[static_cast<std::size_t>(e.u) * n_ + e.v] = static_cast<int>(i);
      edge_id_[static_cast<std::size_t>(e.v) * n_ + e.u] = static_cast<int>(i);
    }
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexMask>& adjacency() const { return adj_; }
  const Edge& edge(int id) const { return edges_[id]; }
  int edge_id(Vertex u, Vertex v) const {
    return edge_id_[static_cast<std::size_t>(u) * n_ + v];
  }

  EdgeSet all_edges() const {
    EdgeSet s;
    for (int i = 0; i < size(); ++i) s.set(i);
    return s;
  }

  // Adjacency masks of the graph with `removed` deleted.
  std::vector<VertexMask> adjacency_without(const EdgeSet& removed) const {
    std::vector<VertexMask> adj = adj_;
    removed.for_each([&](int id) {
      const Edge& e = edges_[id];
      adj[e.u] &= ~(VertexMask{1} << e.v);
      adj[e.v] &= ~(VertexMask{1} << e.u);
    });
    return adj;
  }

  std::vector<Edge> to_edges(const EdgeSet& s) const {
    std::vector<Edge> out;
    s.for_each([&](int id) { out.push_back(edges_[id]); });
    return out;
  }

  EdgeSet to_set(std::span<const Edge> edges) const {
    EdgeSet s;
    for (const Edge& e : edges) {
      const int id = (e.u >= 0 && e.v < n_ && e.u != e.v) ? edge_id(e.u, e.v) : -1;
      if (id < 0) {
        throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} is not in the graph");
      }
      s.set(id);
    }
    return s;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
  std::vector<int> edge_id_;
};

}  // namespace afpower

#endif  // AFPOWER_EDGE_SET_HPP_
