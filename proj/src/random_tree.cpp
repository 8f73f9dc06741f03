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

#include "radionum/random_tree.hpp"

#include <queue>
#include <vector>

#include "radionum/error.hpp"

namespace radionum {

Tree random_tree(int order, std::mt19937_64& rng) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "tree order < 1");
  if (order <= 2) return make_path(order);

  std::uniform_int_distribution<int> pick(0, order - 1);
  std::vector<int> code(order - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<int> degree(order, 1);
  for (int c : code) ++degree[c];

  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < order; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(order - 1);
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Tree::from_edges(order, std::move(edges));
}

Tree random_tree(int order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_tree(order, rng);
}

}  // namespace radionum
