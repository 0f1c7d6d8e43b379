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

// Distance patterns of the square chains: for each case, the vertex of a
// given kind and index that lies at distance exactly m from another.

#ifndef AFPOWER_TESTS_SUPPORT_DISTANCE_CASES_HPP_
#define AFPOWER_TESTS_SUPPORT_DISTANCE_CASES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "afpower/generators.hpp"
#include "afpower/graph.hpp"

namespace afpower::testing {

struct DistanceCase {
  std::string name;
  char from;  // 'x', 'y' or 'z'
  char to;
  std::function<int(int m, int i)> target;  // index of the far vertex
  int min_m;
  int parity;  // 0 even m, 1 odd m, -1 any
};

inline std::vector<DistanceCase> ortho_distance_cases() {
  return {
      {"1 x-x", 'x', 'x', [](int m, int i) { return m + i - 2; }, 4, -1},
      {"2 x-y", 'x', 'y', [](int m, int i) { return m + i - 1; }, 4, -1},
      {"3 x-z", 'x', 'z', [](int m, int i) { return m + i - 3; }, 4, -1},
      {"4 y-x", 'y', 'x', [](int m, int i) { return m + i - 1; }, 4, -1},
      {"5 y-y", 'y', 'y', [](int m, int i) { return m + i; }, 4, -1},
      {"6 y-z", 'y', 'z', [](int m, int i) { return m + i - 2; }, 4, -1},
      {"7 z-x", 'z', 'x', [](int m, int i) { return m + i - 1; }, 4, -1},
      {"8 z-y", 'z', 'y', [](int m, int i) { return m + i; }, 4, -1},
      {"9 z-z", 'z', 'z', [](int m, int i) { return m + i - 2; }, 4, -1},
  };
}

inline std::vector<DistanceCase> para_distance_cases() {
  return {
      {"even 1 x-x", 'x', 'x', [](int m, int i) { return m / 2 + i; }, 2, 0},
      {"even 2 x-z", 'x', 'z', [](int m, int i) { return m / 2 + i; }, 2, 0},
      {"even 3 y-y", 'y', 'y', [](int m, int i) { return m / 2 + i; }, 2, 0},
      {"even 4 z-x", 'z', 'x', [](int m, int i) { return m / 2 + i; }, 2, 0},
      {"even 5 z-z", 'z', 'z', [](int m, int i) { return m / 2 + i; }, 2, 0},
      {"odd 1 x-y", 'x', 'y', [](int m, int i) { return m / 2 + i + 1; }, 3, 1},
      {"odd 2 y-x", 'y', 'x', [](int m, int i) { return m / 2 + i; }, 3, 1},
      {"odd 3 y-z", 'y', 'z', [](int m, int i) { return m / 2 + i; }, 3, 1},
      {"odd 4 z-y", 'z', 'y', [](int m, int i) { return m / 2 + i + 1; }, 3, 1},
  };
}

// Checks one case on a chain of k squares over every (i, m) whose indices
// exist. Returns a description of each failure; a case with no valid
// instance at all is also reported.
inline std::vector<std::string> check_distance_case(const Graph& chain, int k,
                                                    const DistanceCase& c) {
  const SquareChainIndex at{k};
  auto vertex = [&](char kind, int i) -> Vertex {
    return kind == 'x' ? at.x(i) : kind == 'y' ? at.y(i) : at.z(i);
  };
  auto last_index = [&](char kind) { return kind == 'y' ? k + 1 : k; };
  const DistanceMatrix d = all_pairs_distances(chain);
  std::vector<std::string> failures;
  int checked = 0;
  for (int m = c.min_m; m <= 2 * k + 4; ++m) {
    if (c.parity != -1 && m % 2 != c.parity) continue;
    for (int i = 1; i <= last_index(c.from); ++i) {
      const int j = c.target(m, i);
      if (j < 1 || j > last_index(c.to)) continue;
      ++checked;
      const int got = d(vertex(c.from, i), vertex(c.to, j));
      if (got != m) {
        failures.push_back(std::string(1, c.from) + std::to_string(i) + "-" +
                           std::string(1, c.to) + std::to_string(j) + " m=" +
                           std::to_string(m) + " distance " + std::to_string(got));
      }
    }
  }
  if (checked == 0) failures.push_back("no valid (i, m)");
  return failures;
}

}  // namespace afpower::testing

#endif  // AFPOWER_TESTS_SUPPORT_DISTANCE_CASES_HPP_
