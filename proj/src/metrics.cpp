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

#include "radionum/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "radionum/error.hpp"

namespace radionum {
namespace {

void require_diameter_two(const TreeProfile& prof) {
  if (prof.diameter < 2) {
    throw Error(ErrorCode::kDomain,
                "lower bounds are defined for trees of diameter >= 2 (got " +
                    std::to_string(prof.diameter) + ")");
  }
}

std::vector<std::int64_t> vertex_weights(const Tree& tree) {
  std::vector<std::int64_t> w(tree.order());
  for (int v = 0; v < tree.order(); ++v) {
    const auto row = tree.distances_from(v);
    w[v] = std::accumulate(row.begin(), row.end(), std::int64_t{0});
  }
  return w;
}

}  // namespace

std::vector<int> weight_centers(const Tree& tree) {
  const auto w = vertex_weights(tree);
  const auto best = *std::min_element(w.begin(), w.end());
  std::vector<int> centers;
  for (int v = 0; v < tree.order(); ++v) {
    if (w[v] == best) centers.push_back(v);
  }
  return centers;
}

TreeProfile profile(const Tree& tree) {
  if (tree.order() < 2) {
    throw Error(ErrorCode::kDomain, "profile requires at least two vertices");
  }
  TreeProfile prof;
  prof.order = tree.order();
  prof.diameter = tree.max_distance();
  prof.weights = vertex_weights(tree);
  prof.tree_weight = *std::min_element(prof.weights.begin(), prof.weights.end());
  for (int v = 0; v < tree.order(); ++v) {
    if (prof.weights[v] == prof.tree_weight) prof.centers.push_back(v);
  }
  if (prof.centers.size() > 2 ||
      (prof.centers.size() == 2 &&
       !tree.adjacent(prof.centers[0], prof.centers[1]))) {
    throw Error(ErrorCode::kDomain, "weight centers violate the tree structure");
  }
  prof.epsilon = prof.centers.size() == 1 ? 1 : 0;

  prof.levels.resize(tree.order());
  prof.center_of.resize(tree.order());
  prof.branch_of.assign(tree.order(), kNoBranch);
  for (int v = 0; v < tree.order(); ++v) {
    int nearest = 0;
    for (int c = 1; c < static_cast<int>(prof.centers.size()); ++c) {
      if (tree.distance(v, prof.centers[c]) <
          tree.distance(v, prof.centers[nearest])) {
        nearest = c;
      }
    }
    const int center = prof.centers[nearest];
    prof.center_of[v] = nearest;
    prof.levels[v] = tree.distance(v, center);
    if (prof.levels[v] == 0) continue;
    for (int b : tree.neighbors(center)) {
      if (tree.distance(b, v) == prof.levels[v] - 1) {
        prof.branch_of[v] = b;
        break;
      }
    }
  }
  prof.total_level = std::accumulate(prof.levels.begin(), prof.levels.end(),
                                     std::int64_t{0});
  return prof;
}

std::int64_t weight_lower_bound(const Tree& tree, const TreeProfile& prof) {
  require_diameter_two(prof);
  const std::int64_t p = tree.order();
  return (p - 1) * (prof.diameter + 1) + 1 - 2 * prof.tree_weight;
}

std::int64_t level_lower_bound(const Tree& tree, const TreeProfile& prof) {
  require_diameter_two(prof);
  const std::int64_t p = tree.order();
  const std::int64_t eps = prof.epsilon;
  return (p - 1) * (prof.diameter + eps) - 2 * prof.total_level + eps;
}

}  // namespace radionum
