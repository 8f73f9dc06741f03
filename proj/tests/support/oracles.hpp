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

// Test-only oracles. Each works from a raw edge list with its own distance
// computation, so none of them shares code paths with the library.
#ifndef RADIONUM_TESTS_ORACLES_HPP
#define RADIONUM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;
using Matrix = std::vector<std::vector<int>>;

// Floyd-Warshall on the unit-weight graph.
inline Matrix distances(int p, const Edges& edges) {
  const int inf = std::numeric_limits<int>::max() / 4;
  Matrix d(p, std::vector<int>(p, inf));
  for (int v = 0; v < p; ++v) d[v][v] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int m = 0; m < p; ++m)
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
  return d;
}

inline int diameter(const Matrix& d) {
  int best = 0;
  for (const auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

// Radio number by trying every vertex order with the tightest labels along
// it; no pruning.
inline std::int64_t radio_number(int p, const Edges& edges) {
  const auto d = distances(p, edges);
  const int need = diameter(d) + 1;
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> f(p);
  do {
    f[order[0]] = 0;
    for (int k = 1; k < p; ++k) {
      std::int64_t x = 0;
      for (int i = 0; i < k; ++i)
        x = std::max<std::int64_t>(x, f[order[i]] + need - d[order[i]][order[k]]);
      f[order[k]] = x;
    }
    best = std::min(best, f[order[p - 1]]);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Smallest span of an L(2,1) labeling: labels 0..m, adjacent differ by >= 2,
// distance-two pairs differ by >= 1.
inline int lambda21(int p, const Edges& edges) {
  const auto d = distances(p, edges);
  for (int m = 0;; ++m) {
    std::vector<int> f(p, 0);
    while (true) {
      bool ok = true;
      for (int u = 0; u < p && ok; ++u)
        for (int v = u + 1; v < p && ok; ++v)
          ok = !(d[u][v] == 1 && std::abs(f[u] - f[v]) < 2) &&
               !(d[u][v] == 2 && f[u] == f[v]);
      if (ok) return m;
      int i = 0;
      while (i < p && f[i] == m) f[i++] = 0;
      if (i == p) break;
      ++f[i];
    }
  }
}

// Weight centers as centroids: vertices whose largest remaining component
// after deletion is minimal.
inline std::vector<int> centroids(int p, const Edges& edges) {
  const auto d = distances(p, edges);
  std::vector<int> largest(p, 0);
  for (int v = 0; v < p; ++v) {
    // Two vertices share a component of T - v iff their path avoids v.
    std::vector<int> comp(p, -1);
    int next = 0;
    for (int a = 0; a < p; ++a) {
      if (a == v || comp[a] >= 0) continue;
      comp[a] = next;
      int size = 0;
      for (int b = 0; b < p; ++b) {
        if (b != v && d[a][b] != d[a][v] + d[v][b]) {
          comp[b] = next;
          ++size;
        }
      }
      largest[v] = std::max(largest[v], size);
      ++next;
    }
  }
  const int best = *std::min_element(largest.begin(), largest.end());
  std::vector<int> out;
  for (int v = 0; v < p; ++v)
    if (largest[v] == best) out.push_back(v);
  return out;
}

// Sizes of the two components left after deleting edge {a, b}.
inline std::pair<int, int> split_sizes(int p, const Edges& edges, int a, int b) {
  const auto d = distances(p, edges);
  int near_a = 0;
  for (int v = 0; v < p; ++v)
    if (d[v][a] < d[v][b]) ++near_a;
  return {near_a, p - near_a};
}

}  // namespace oracle

#endif  // RADIONUM_TESTS_ORACLES_HPP
