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

#ifndef RADIONUM_TREE_HPP
#define RADIONUM_TREE_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace radionum {

struct Edge {
  int u = 0;
  int v = 0;
};

// Immutable tree on dense vertex ids 0..order()-1. All-pairs hop distances
// are computed once at construction.
class Tree {
 public:
  // Validates and builds. Throws Error(kParse) on out-of-range ids, self
  // loops, duplicate edges, cycles, or a wrong edge count.
  static Tree from_edges(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const { return distance(u, v) == 1; }

  int distance(int u, int v) const {
    return dist_[static_cast<std::size_t>(u) * order_ + v];
  }
  std::span<const int> distances_from(int v) const {
    return {dist_.data() + static_cast<std::size_t>(v) * order_,
            static_cast<std::size_t>(order_)};
  }
  // Row-major order() x order() matrix.
  std::span<const int> distance_matrix() const noexcept { return dist_; }

  // Largest pairwise distance; 0 for the single-vertex tree. Unlike
  // diameter(), never throws.
  int max_distance() const noexcept { return max_distance_; }

 private:
  Tree() = default;

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> dist_;
  int max_distance_ = 0;
};

struct TreeStats {
  int diameter = 0;
  std::vector<int> eccentricity;
};

// Tree text format: '#' lines and blank lines ignored; first data line is the
// vertex count p, followed by exactly p-1 lines "u v". Errors carry the
// offending line number.
Tree parse_tree(std::istream& in);
Tree parse_tree(std::string_view text);
Tree load_tree(const std::string& path);

std::string to_text(const Tree& tree);

// Graphviz export; when labels are given, nodes are annotated "id:f(id)".
std::string to_dot(const Tree& tree,
                   std::optional<std::span<const long long>> labels = {});

// Hop distances from one source, by breadth-first traversal.
std::vector<int> bfs_distances(const Tree& tree, int source);

// Fresh p x p matrix from p traversals (independent of the cached one).
std::vector<int> all_pairs_distances(const Tree& tree);

// Throws Error(kDomain) for p = 1.
int diameter(const Tree& tree);

// Two-sweep BFS diameter; cross-check for diameter().
int diameter_double_sweep(const Tree& tree);

TreeStats stats(const Tree& tree);

// Relabels vertex v as perm[v].
Tree relabel(const Tree& tree, std::span<const int> perm);

Tree make_path(int order);

}  // namespace radionum

#endif  // RADIONUM_TREE_HPP
