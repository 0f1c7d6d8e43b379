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

#ifndef AFPOWER_BUDGET_HPP_
#define AFPOWER_BUDGET_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace afpower {

// Work caps for the exponential solvers. Zero means "no cap".
struct Budget {
  std::uint64_t node_limit = 0;
  std::chrono::milliseconds time_limit{0};

  static Budget unlimited() { return {}; }
};

// Raised when a solver runs out of budget. Carries whatever bounds on the
// answer were established before the cut-off.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int lower_bound,
                 std::optional<int> upper_bound)
      : std::runtime_error(what),
        lower_bound_(lower_bound),
        upper_bound_(upper_bound) {}

  int lower_bound() const { return lower_bound_; }
  std::optional<int> upper_bound() const { return upper_bound_; }

 private:
  int lower_bound_;
  std::optional<int> upper_bound_;
};

namespace detail {

struct OutOfBudget {};

// Counts search nodes against a Budget; throws OutOfBudget when spent.
class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    ++nodes_;
    if (budget_.node_limit != 0 && nodes_ > budget_.node_limit) throw OutOfBudget{};
    if (budget_.time_limit.count() != 0 && (nodes_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time_limit) {
      throw OutOfBudget{};
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

}  // namespace afpower

#endif  // AFPOWER_BUDGET_HPP_
