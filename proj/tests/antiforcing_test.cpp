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

#include <chrono>
#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "afpower/antiforcing.hpp"
#include "afpower/generators.hpp"
#include "support/oracles.hpp"

namespace afpower {
namespace {

void expect_both_solvers(const Graph& g, int expected, const std::string& what) {
  const AntiForcingResult a = af_subset_search(g);
  const AntiForcingResult b = af_via_matchings(g);
  EXPECT_EQ(a.value, expected) << what;
  EXPECT_EQ(b.value, expected) << what;
  if (a.method != Method::kConventionNoPerfectMatching) {
    EXPECT_EQ(a.method, Method::kSubsetSearch);
    EXPECT_EQ(b.method, Method::kViaMatchings);
    EXPECT_EQ(static_cast<int>(a.witness.size()), expected) << what;
    EXPECT_EQ(static_cast<int>(b.witness.size()), expected) << what;
    EXPECT_TRUE(is_anti_forcing_set(g, a.witness)) << what;
    EXPECT_TRUE(is_anti_forcing_set(g, b.witness)) << what;
  }
}

TEST(AntiForcing, SpotValues) {
  expect_both_solvers(path(6), 0, "path 6");
  expect_both_solvers(cycle(6), 1, "cycle 6");
  expect_both_solvers(cycle(8), 1, "cycle 8");
  expect_both_solvers(complete(4), 2, "K4");
  expect_both_solvers(power(path(4), 2), 1, "path 4 squared");
  expect_both_solvers(complete(6), 6, "K6");
  expect_both_solvers(Graph(0), 0, "empty");
}

TEST(AntiForcing, PathSquareWitnessIsTheLongChord) {
  const Graph g = power(path(4), 2);
  const std::vector<Edge> chord{{0, 2}};
  EXPECT_TRUE(is_anti_forcing_set(g, chord));
  EXPECT_FALSE(is_anti_forcing_set(g, std::vector<Edge>{}));
}

TEST(AntiForcing, NoPerfectMatchingConvention) {
  for (int k = 1; k <= 4; ++k) {
    const Graph g = power(friendship(k), 2);
    const AntiForcingResult r = af_subset_search(g);
    EXPECT_EQ(r.value, 2 * k * k + k);
    EXPECT_EQ(r.method, Method::kConventionNoPerfectMatching);
    EXPECT_TRUE(r.witness.empty());
    EXPECT_EQ(af_via_matchings(g).method, Method::kConventionNoPerfectMatching);
  }
  EXPECT_EQ(af_via_matchings(path(5)).value, 4);
  EXPECT_EQ(method_name(Method::kConventionNoPerfectMatching), "convention_no_pm");
}

TEST(AntiForcing, IsAntiForcingSetRejectsForeignEdges) {
  const std::vector<Edge> bogus{{0, 2}};
  EXPECT_THROW(is_anti_forcing_set(path(4), bogus), std::invalid_argument);
}

TEST(AntiForcing, SizeLimits) {
  EXPECT_THROW(af_via_matchings(path(66)), std::length_error);
}

// Values frozen from the exhaustive reference solver; both solvers here must
// reproduce them.
TEST(AntiForcing, FrozenPowerValues) {
  const std::vector<std::tuple<Family, int, int, int>> cases{
      {Family::kPath, 6, 2, 1},   {Family::kPath, 6, 3, 3},   {Family::kPath, 8, 2, 2},
      {Family::kPath, 8, 3, 3},   {Family::kPath, 10, 3, 5},  {Family::kCycle, 6, 2, 4},
      {Family::kCycle, 8, 2, 4},  {Family::kCycle, 8, 3, 9},  {Family::kCycle, 10, 2, 5},
      {Family::kCycle, 6, 3, 6},  {Family::kOrthoChain, 3, 1, 2},
      {Family::kOrthoChain, 3, 2, 4}, {Family::kParaChain, 3, 2, 6},
      {Family::kParaChain, 3, 3, 9},
  };
  for (const auto& [family, k, m, expected] : cases) {
    expect_both_solvers(power(make_family(family, k), m), expected,
                        std::string(family_name(family)) + " k=" + std::to_string(k) +
                            " m=" + std::to_string(m));
  }
}

TEST(AntiForcing, AgreesWithBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      const int expected = testing::brute_force_af(g);
      ASSERT_EQ(af_subset_search(g).value, expected);
      ASSERT_EQ(af_via_matchings(g).value, expected);
    }
  }
}

TEST(AntiForcing, AgreesWithBruteForceOnRandomEightVertexGraphs) {
  std::mt19937 rng(1234);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_connected_graph(8, 0.3, rng);
    if (g.size() > 18) continue;
    const int expected = testing::brute_force_af(g);
    ASSERT_EQ(af_subset_search(g).value, expected);
    ASSERT_EQ(af_via_matchings(g).value, expected);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(AntiForcing, WitnessesAreMinimal) {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_connected_graph(8 + 2 * (trial % 2), 0.3, rng);
    for (const AntiForcingResult& r : {af_subset_search(g), af_via_matchings(g)}) {
      if (r.method == Method::kConventionNoPerfectMatching) continue;
      ASSERT_TRUE(is_anti_forcing_set(g, r.witness));
      for (std::size_t drop = 0; drop < r.witness.size(); ++drop) {
        std::vector<Edge> smaller = r.witness;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        ASSERT_FALSE(is_anti_forcing_set(g, smaller));
      }
    }
  }
}

TEST(AntiForcing, PerMatchingValues) {
  const Graph k4 = complete(4);
  const Matching m({{0, 1}, {2, 3}});
  const HittingSolution af = af_of_matching(k4, m);
  EXPECT_EQ(af.size, 2);
  for (const Edge& e : af.edges) EXPECT_FALSE(m.contains(e));
  EXPECT_TRUE(is_anti_forcing_set(k4, af.edges));
  const HittingSolution f = forcing_of_matching(k4, m);
  EXPECT_EQ(f.size, 1);
  EXPECT_TRUE(m.contains(f.edges.at(0)));
  const MatchingAnalysis a = analyze_matching(k4, m);
  EXPECT_EQ(a.af_of_m, 2);
  EXPECT_EQ(a.f_of_m, 1);
  EXPECT_EQ(forcing_number(k4), 1);
  EXPECT_EQ(forcing_number(path(4)), 0);
  EXPECT_THROW(forcing_number(path(3)), std::domain_error);
  EXPECT_THROW(af_of_matching(k4, Matching({{0, 1}})), std::invalid_argument);
}

TEST(AntiForcing, ForcingAgreesWithContainmentDefinition) {
  for (int n = 2; n <= 6; n += 2) {
    for (const Graph& g : testing::all_graphs(n)) {
      for (const Matching& m : enumerate_perfect_matchings(g)) {
        const std::vector<Edge> edges(m.edges().begin(), m.edges().end());
        ASSERT_EQ(forcing_of_matching(g, m).size, testing::brute_force_forcing_of(g, edges));
      }
    }
  }
}

TEST(AntiForcing, SandwichInequality) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = testing::random_connected_graph(8, 0.35, rng);
    const int delta = max_degree(g);
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      const MatchingAnalysis a = analyze_matching(g, m);
      ASSERT_LE(a.f_of_m, a.af_of_m);
      ASSERT_LE(a.af_of_m, (delta - 1) * a.f_of_m);
    }
  }
}

TEST(AntiForcing, MinimumOverMatchingsEqualsGlobalValue) {
  const Graph g = power(cycle(8), 2);
  int best = 1 << 20;
  for (const Matching& m : enumerate_perfect_matchings(g)) {
    best = std::min(best, af_of_matching(g, m).size);
  }
  EXPECT_EQ(best, af_via_matchings(g).value);
}

TEST(AntiForcing, BudgetExhaustion) {
  const Graph g = power(cycle(12), 3);
  const Budget tiny{50, std::chrono::milliseconds(0)};
  try {
    af_subset_search(g, tiny);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GE(e.lower_bound(), 0);
    EXPECT_LE(e.lower_bound(), 11);
  }
  try {
    af_via_matchings(g, tiny);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    if (e.upper_bound()) EXPECT_GE(*e.upper_bound(), 11);
  }
  EXPECT_THROW(forcing_number(g, tiny), BudgetExceeded);
}

}  // namespace
}  // namespace afpower
