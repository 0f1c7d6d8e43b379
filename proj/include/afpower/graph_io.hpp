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

// Graph serialization.
//
// JSON:      {"n": 4, "edges": [[0,1],[1,2]], "labels": {"0": "v1", ...}}
// Edge list: first line "n m", then m lines "u v".
//
// Output is always canonical JSON: edges sorted lexicographically, u < v.

#ifndef AFPOWER_GRAPH_IO_HPP_
#define AFPOWER_GRAPH_IO_HPP_

#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "afpower/graph.hpp"
#include "json.hpp"

namespace afpower {

inline nlohmann::ordered_json edges_to_json(std::span<const Edge> edges) {
  auto arr = nlohmann::ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

inline nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["edges"] = edges_to_json(g.edges());
  if (g.has_labels()) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (Vertex v = 0; v < g.order(); ++v) labels[std::to_string(v)] = g.label(v);
    j["labels"] = std::move(labels);
  }
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n")) {
    throw std::invalid_argument("graph JSON must be an object with key \"n\"");
  }
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("each edge must be a pair [u, v]");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && !j.at("labels").is_null()) {
    labels.assign(static_cast<std::size_t>(std::max(n, 0)), std::string());
    std::vector<bool> seen(labels.size(), false);
    for (const auto& [key, value] : j.at("labels").items()) {
      std::size_t pos = 0;
      int idx = -1;
      try {
        idx = std::stoi(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != key.size() || idx < 0 || idx >= n) {
        throw std::invalid_argument("label key '" + key +
                                    "' is not a vertex index");
      }
      labels[idx] = value.get<std::string>();
      seen[idx] = true;
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
      if (!seen[v]) {
        throw std::invalid_argument("label map is missing vertex " +
                                    std::to_string(v));
      }
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

inline Graph parse_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("edge list must start with \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) {
      throw std::invalid_argument("edge list ended after " + std::to_string(i) +
                                  " of " + std::to_string(m) + " edges");
    }
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

// Accepts either format; JSON is recognized by a leading '{'.
inline Graph read_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty graph input");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream ss(text);
  return parse_edge_list(ss);
}

}  // namespace afpower

#endif  // AFPOWER_GRAPH_IO_HPP_
