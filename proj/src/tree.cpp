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

#include "radionum/tree.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "radionum/error.hpp"

namespace radionum {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string at_line(int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " : std::string();
}

// Shared edge validation for from_edges() and the text parser. `lines` is
// either empty or parallel to `edges`.
void validate_edges(int order, const std::vector<Edge>& edges,
                    const std::vector<int>& lines) {
  if (order < 1) {
    throw Error(ErrorCode::kParse, at_line(lines.empty() ? 0 : 1) +
                                       "vertex count must be at least 1");
  }
  auto line_of = [&](std::size_t i) { return lines.empty() ? 0 : lines[i]; };
  DisjointSets sets(order);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const std::string where = at_line(line_of(i));
    if (u < 0 || u >= order || v < 0 || v >= order) {
      throw Error(ErrorCode::kParse,
                  where + "vertex id out of range 0.." +
                      std::to_string(order - 1) + " in edge " +
                      std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw Error(ErrorCode::kParse,
                  where + "self-loop at vertex " + std::to_string(u));
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorCode::kParse, where + "duplicate edge " +
                                         std::to_string(u) + " " +
                                         std::to_string(v));
    }
    if (i + 1 > static_cast<std::size_t>(order - 1)) {
      throw Error(ErrorCode::kParse,
                  where + "too many edges: a tree on " +
                      std::to_string(order) + " vertices has " +
                      std::to_string(order - 1));
    }
    if (!sets.unite(u, v)) {
      throw Error(ErrorCode::kParse, where + "cycle detected at edge " +
                                         std::to_string(u) + " " +
                                         std::to_string(v));
    }
  }
  if (edges.size() != static_cast<std::size_t>(order - 1)) {
    throw Error(ErrorCode::kParse,
                "disconnected: expected " + std::to_string(order - 1) +
                    " edges, found " + std::to_string(edges.size()));
  }
}

}  // namespace

Tree Tree::from_edges(int order, std::vector<Edge> edges) {
  validate_edges(order, edges, {});

  Tree t;
  t.order_ = order;
  t.edges_ = std::move(edges);
  t.adjacency_.assign(order, {});
  for (const auto& e : t.edges_) {
    t.adjacency_[e.u].push_back(e.v);
    t.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : t.adjacency_) std::sort(nb.begin(), nb.end());

  t.dist_ = all_pairs_distances(t);
  t.max_distance_ =
      t.dist_.empty() ? 0 : *std::max_element(t.dist_.begin(), t.dist_.end());
  // p-1 acyclic edges already imply connectivity; a negative entry would
  // mean an unreachable vertex.
  if (std::any_of(t.dist_.begin(), t.dist_.end(), [](int d) { return d < 0; })) {
    throw Error(ErrorCode::kParse, "disconnected: vertex unreachable");
  }
  return t;
}

Tree parse_tree(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::optional<int> order;
  std::vector<Edge> edges;
  std::vector<int> lines;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;

    std::istringstream fields(raw);
    if (!order) {
      long long p = 0;
      std::string extra;
      if (!(fields >> p) || (fields >> extra) || p < 1 || p > 1'000'000) {
        throw Error(ErrorCode::kParse,
                    at_line(line_no) + "malformed vertex count '" + raw + "'");
      }
      order = static_cast<int>(p);
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw Error(ErrorCode::kParse,
                  at_line(line_no) + "malformed edge line '" + raw + "'");
    }
    if (u < 0 || v < 0 || u >= *order || v >= *order) {
      throw Error(ErrorCode::kParse,
                  at_line(line_no) + "vertex id out of range 0.." +
                      std::to_string(*order - 1) + " in edge " +
                      std::to_string(u) + " " + std::to_string(v));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    lines.push_back(line_no);
  }
  if (!order) throw Error(ErrorCode::kParse, "empty input: no vertex count");

  validate_edges(*order, edges, lines);
  return Tree::from_edges(*order, std::move(edges));
}

Tree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tree(in);
}

Tree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return parse_tree(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string to_text(const Tree& tree) {
  std::ostringstream out;
  out << tree.order() << '\n';
  for (const auto& e : tree.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string to_dot(const Tree& tree,
                   std::optional<std::span<const long long>> labels) {
  if (labels && labels->size() != static_cast<std::size_t>(tree.order())) {
    throw Error(ErrorCode::kInvalidArgument,
                "labeling size does not match tree order");
  }
  std::ostringstream out;
  out << "graph T {\n";
  for (int v = 0; v < tree.order(); ++v) {
    out << "  " << v;
    if (labels) out << " [label=\"" << v << ':' << (*labels)[v] << "\"]";
    out << ";\n";
  }
  for (const auto& e : tree.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<int> bfs_distances(const Tree& tree, int source) {
  std::vector<int> dist(tree.order(), -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    for (int y : tree.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

std::vector<int> all_pairs_distances(const Tree& tree) {
  const auto p = static_cast<std::size_t>(tree.order());
  std::vector<int> matrix;
  matrix.reserve(p * p);
  for (std::size_t s = 0; s < p; ++s) {
    const auto row = bfs_distances(tree, static_cast<int>(s));
    matrix.insert(matrix.end(), row.begin(), row.end());
  }
  return matrix;
}

int diameter(const Tree& tree) {
  if (tree.order() < 2) {
    throw Error(ErrorCode::kDomain,
                "diameter undefined for a single-vertex tree");
  }
  return tree.max_distance();
}

int diameter_double_sweep(const Tree& tree) {
  if (tree.order() < 2) {
    throw Error(ErrorCode::kDomain,
                "diameter undefined for a single-vertex tree");
  }
  auto first = bfs_distances(tree, 0);
  const int far = static_cast<int>(
      std::max_element(first.begin(), first.end()) - first.begin());
  auto second = bfs_distances(tree, far);
  return *std::max_element(second.begin(), second.end());
}

TreeStats stats(const Tree& tree) {
  TreeStats s;
  s.diameter = diameter(tree);
  s.eccentricity.resize(tree.order());
  for (int v = 0; v < tree.order(); ++v) {
    const auto row = tree.distances_from(v);
    s.eccentricity[v] = *std::max_element(row.begin(), row.end());
  }
  return s;
}

Tree relabel(const Tree& tree, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(tree.order())) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  }
  std::vector<Edge> edges;
  edges.reserve(tree.edges().size());
  for (const auto& e : tree.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Tree::from_edges(tree.order(), std::move(edges));
}

Tree make_path(int order) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "path order < 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < order; ++v) edges.push_back({v, v + 1});
  return Tree::from_edges(order, std::move(edges));
}

}  // namespace radionum
