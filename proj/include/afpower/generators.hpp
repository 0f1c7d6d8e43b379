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

// Constructors for the graph families studied here. Every family graph
// carries vertex labels so reports and distance checks can refer to
// vertices by their role (v3, c0, y2, ...).
//
// Square-chain layout, square i of k:
//   ortho:  y_i - x_i - z_i - y_{i+1} - y_i   (cut vertices adjacent)
//   para:   y_i - x_i - y_{i+1} - z_i - y_i   (cut vertices opposite)
// Index order is y_1..y_{k+1}, then x_1..x_k, then z_1..z_k.

#ifndef AFPOWER_GENERATORS_HPP_
#define AFPOWER_GENERATORS_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "afpower/graph.hpp"

namespace afpower {

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

inline std::string indexed(std::string_view prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

}  // namespace detail

inline Graph path(int k) {
  detail::require(k >= 1, "path requires k >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(detail::indexed("v", i + 1));
    if (i + 1 < k) edges.emplace_back(i, i + 1);
  }
  return Graph(k, std::move(edges), std::move(labels));
}

inline Graph cycle(int k) {
  detail::require(k >= 3, "cycle requires k >= 3");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(detail::indexed("v", i + 1));
    edges.emplace_back(i, (i + 1) % k);
  }
  return Graph(k, std::move(edges), std::move(labels));
}

inline Graph complete(int n) {
  detail::require(n >= 1, "complete graph requires n >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    labels.push_back(detail::indexed("v", u + 1));
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges), std::move(labels));
}

// k triangles sharing hub 0. Triangle i is {h, a_i, b_i}.
inline Graph friendship(int k) {
  detail::require(k >= 1, "friendship graph requires k >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels{"h"};
  for (int i = 1; i <= k; ++i) {
    const Vertex a = 2 * i - 1;
    const Vertex b = 2 * i;
    labels.push_back(detail::indexed("a", i));
    labels.push_back(detail::indexed("b", i));
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    edges.emplace_back(a, b);
  }
  return Graph(2 * k + 1, std::move(edges), std::move(labels));
}

// Spine c_0..c_k then peaks t_1..t_k; triangle i is {c_{i-1}, c_i, t_i}.
inline Graph triangular_chain(int k) {
  detail::require(k >= 1, "triangular chain requires k >= 1");
  auto spine = [](int i) { return static_cast<Vertex>(i); };
  auto peak = [k](int i) { return static_cast<Vertex>(k + i); };
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i <= k; ++i) labels.push_back(detail::indexed("c", i));
  for (int i = 1; i <= k; ++i) labels.push_back(detail::indexed("t", i));
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(spine(i - 1), spine(i));
    edges.emplace_back(spine(i - 1), peak(i));
    edges.emplace_back(spine(i), peak(i));
  }
  return Graph(2 * k + 1, std::move(edges), std::move(labels));
}

// Index helpers for the square chains, 1-based subscripts as in the labels.
struct SquareChainIndex {
  int k;
  Vertex y(int i) const { return i - 1; }
  Vertex x(int i) const { return k + i; }
  Vertex z(int i) const { return 2 * k + i; }
};

namespace detail {

inline std::vector<std::string> square_chain_labels(int k) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k + 1; ++i) labels.push_back(indexed("y", i));
  for (int i = 1; i <= k; ++i) labels.push_back(indexed("x", i));
  for (int i = 1; i <= k; ++i) labels.push_back(indexed("z", i));
  return labels;
}

}  // namespace detail

inline Graph ortho_square_chain(int k) {
  detail::require(k >= 1, "ortho square chain requires k >= 1");
  const SquareChainIndex at{k};
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(at.y(i), at.x(i));
    edges.emplace_back(at.x(i), at.z(i));
    edges.emplace_back(at.z(i), at.y(i + 1));
    edges.emplace_back(at.y(i + 1), at.y(i));
  }
  return Graph(3 * k + 1, std::move(edges), detail::square_chain_labels(k));
}

inline Graph para_square_chain(int k) {
  detail::require(k >= 1, "para square chain requires k >= 1");
  const SquareChainIndex at{k};
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(at.y(i), at.x(i));
    edges.emplace_back(at.x(i), at.y(i + 1));
    edges.emplace_back(at.y(i + 1), at.z(i));
    edges.emplace_back(at.z(i), at.y(i));
  }
  return Graph(3 * k + 1, std::move(edges), detail::square_chain_labels(k));
}

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kFriendship,
  kTriangularChain,
  kOrthoChain,
  kParaChain,
};

inline constexpr std::array<Family, 7> kAllFamilies{
    Family::kPath,           Family::kCycle,      Family::kComplete,
    Family::kFriendship,     Family::kTriangularChain, Family::kOrthoChain,
    Family::kParaChain};

inline constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kFriendship: return "friendship";
    case Family::kTriangularChain: return "tri-chain";
    case Family::kOrthoChain: return "ortho-chain";
    case Family::kParaChain: return "para-chain";
  }
  return "unknown";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

inline Graph make_family(Family f, int k) {
  switch (f) {
    case Family::kPath: return path(k);
    case Family::kCycle: return cycle(k);
    case Family::kComplete: return complete(k);
    case Family::kFriendship: return friendship(k);
    case Family::kTriangularChain: return triangular_chain(k);
    case Family::kOrthoChain: return ortho_square_chain(k);
    case Family::kParaChain: return para_square_chain(k);
  }
  throw std::invalid_argument("unknown family");
}

// Smallest k the family constructor accepts.
inline constexpr int family_min_k(Family f) {
  return f == Family::kCycle ? 3 : 1;
}

}  // namespace afpower

#endif  // AFPOWER_GENERATORS_HPP_
