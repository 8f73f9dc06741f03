// Copyright 2026 The radionum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RADIONUM_SOLVERS_HPP
#define RADIONUM_SOLVERS_HPP

#include <cstdint>
#include <optional>

#include "radionum/labeling.hpp"
#include "radionum/metrics.hpp"
#include "radionum/tree.hpp"

namespace radionum {

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;
inline constexpr int kDefaultExactCap = 10;

enum class SearchStatus { kFound, kExhausted, kBudgetExceeded };

const char* to_string(SearchStatus status) noexcept;

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<VertexOrdering> ordering;  // set iff kFound
  std::optional<RadioLabeling> labeling;   // set iff kFound
  std::uint64_t nodes_explored = 0;
};

// Greedy pass: after u_0, repeatedly take the admissible vertex whose branch
// has the most unplaced vertices, preferring higher level and then lower id.
// A vertex is admissible after `prev` when it sits in a different branch
// (opposite side in the two-center case). Returns the ordering only if it
// passes ordering_valid().
std::optional<VertexOrdering> greedy_ordering(const Tree& tree,
                                              const TreeProfile& prof);

// Looks for an ordering satisfying ordering_valid(): greedy first, then
// exhaustive backtracking. kExhausted proves that no such ordering exists,
// i.e. the level lower bound is not attained. Deterministic.
SearchOutcome search_ordering(const Tree& tree, const TreeProfile& prof,
                              std::uint64_t budget = kDefaultBudget);

struct ExactOptions {
  int cap = kDefaultExactCap;
  std::uint64_t budget = kDefaultBudget;
  // Optional starting incumbent. Must be a valid radio labeling of the tree.
  const RadioLabeling* incumbent = nullptr;
};

struct ExactResult {
  std::int64_t rn = 0;
  RadioLabeling witness;  // labels start at 0, span == rn
  std::uint64_t nodes_explored = 0;
};

// Radio number by depth-first search over vertex orderings. Each prefix
// gets its tightest labels (next label = max over placed v of
// f(v) + diam + 1 - d(v, next)); branches whose partial span cannot beat
// the incumbent are cut. Throws Error(kCapExceeded) when p > cap and
// Error(kBudgetExceeded) rather than return an unproven value.
ExactResult exact_rn(const Tree& tree, const ExactOptions& options = {});

// Tightest labels along a fixed vertex order, first vertex at 0.
RadioLabeling greedy_labels(const Tree& tree, const VertexOrdering& order);

}  // namespace radionum

#endif  // RADIONUM_SOLVERS_HPP
