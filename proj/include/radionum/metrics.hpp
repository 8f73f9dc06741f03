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

#ifndef RADIONUM_METRICS_HPP
#define RADIONUM_METRICS_HPP

#include <cstdint>
#include <vector>

#include "radionum/tree.hpp"

namespace radionum {

inline constexpr int kNoBranch = -1;

// Weight, weight-center and level data of a tree.
//
// The weight of the tree from v is the sum of distances from v to every
// vertex; weight centers minimise it. A tree has one weight center, or two
// adjacent ones whose removal-edge splits it into equal halves. Levels are
// measured from the nearest weight center, so both centers of a two-center
// tree sit at level 0.
struct TreeProfile {
  int order = 0;
  int diameter = 0;
  std::vector<std::int64_t> weights;  // per vertex
  std::int64_t tree_weight = 0;       // minimum of weights
  std::vector<int> centers;           // ascending, size 1 or 2
  int epsilon = 1;                    // 1 for one center, 0 for two
  std::vector<int> levels;
  std::int64_t total_level = 0;
  // Root of the branch containing v: the neighbor of v's nearest center on
  // the path from that center to v. kNoBranch for the centers themselves.
  std::vector<int> branch_of;
  // Index into `centers` of the center v hangs from (its nearest center).
  std::vector<int> center_of;

  bool is_center(int v) const { return levels[v] == 0; }
};

// Weight centers for any tree with at least one vertex, from the distance
// matrix. Ascending.
std::vector<int> weight_centers(const Tree& tree);

// Requires p >= 2.
TreeProfile profile(const Tree& tree);

// (p-1)(d+1) + 1 - 2 w(T). Requires d >= 2.
std::int64_t weight_lower_bound(const Tree& tree, const TreeProfile& prof);

// (p-1)(d+eps) - 2 L(T) + eps. Requires d >= 2.
std::int64_t level_lower_bound(const Tree& tree, const TreeProfile& prof);

}  // namespace radionum

#endif  // RADIONUM_METRICS_HPP
