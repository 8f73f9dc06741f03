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

#ifndef RADIONUM_LABELING_HPP
#define RADIONUM_LABELING_HPP

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radionum/metrics.hpp"
#include "radionum/tree.hpp"

namespace radionum {

// Vertex-indexed labels f(0..p-1).
class RadioLabeling {
 public:
  RadioLabeling() = default;
  explicit RadioLabeling(std::vector<std::int64_t> labels)
      : labels_(std::move(labels)) {}

  std::size_t size() const noexcept { return labels_.size(); }
  std::int64_t operator[](int v) const { return labels_[v]; }
  std::span<const std::int64_t> labels() const noexcept { return labels_; }

  // max f - min f; 0 for a single label. Throws on an empty labeling.
  std::int64_t span() const;

 private:
  std::vector<std::int64_t> labels_;
};

// A candidate linear order u_0..u_{p-1}. Not required to be a permutation;
// ordering_valid() reports that.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  explicit VertexOrdering(std::vector<int> order) : order_(std::move(order)) {}

  std::size_t size() const noexcept { return order_.size(); }
  int operator[](std::size_t i) const { return order_[i]; }
  std::span<const int> vertices() const noexcept { return order_; }

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

 private:
  std::vector<int> order_;
};

struct RadioVerdict {
  bool pass = true;
  // First violating pair in lexicographic order, u < v.
  int u = -1;
  int v = -1;
  // (diam + 1) - d(u,v) - |f(u) - f(v)|, positive on failure.
  std::int64_t deficit = 0;

  explicit operator bool() const noexcept { return pass; }
};

struct OrderingVerdict {
  enum class Clause {
    kNone,            // passed
    kNotPermutation,  // wrong size or repeated/missing vertex
    kEndpoints,       // first/last vertex condition on the weight centers
    kDistance,        // pairwise distance condition for (i, j)
  };
  Clause clause = Clause::kNone;
  // Positions in the ordering (kDistance: i < j; kEndpoints: the offending
  // position; kNotPermutation: first bad position or -1 on size mismatch).
  int i = -1;
  int j = -1;

  bool pass() const noexcept { return clause == Clause::kNone; }
  explicit operator bool() const noexcept { return pass(); }
  std::string describe() const;
};

// Checks d(u,v) + |f(u)-f(v)| >= diam + 1 over all pairs.
RadioVerdict verify_radio(const Tree& tree, const RadioLabeling& labeling);

std::int64_t span(const RadioLabeling& labeling);

// Checks the certificate conditions:
//  (a) one center w: u_0 = w and u_{p-1} adjacent to w;
//      two centers w, w': {u_0, u_{p-1}} = {w, w'};
//  (b) for all i < j,
//      d(u_i,u_j) >= sum_{t=i}^{j-1} (L(u_t) + L(u_{t+1})) - (j-i)(d+eps) + d + 1.
// Pairs are scanned in lexicographic (i, j) order.
OrderingVerdict ordering_valid(const Tree& tree, const TreeProfile& prof,
                               const VertexOrdering& order);

// Labels u_0 with 0 and steps f(u_{i+1}) = f(u_i) + (d+eps) - L(u_i) - L(u_{i+1}).
// Throws Error(kInvalidArgument) carrying the ordering_valid() failure.
RadioLabeling label_from_ordering(const Tree& tree, const TreeProfile& prof,
                                  const VertexOrdering& order);

// Vertices sorted by label (ties by id).
VertexOrdering ordering_of(const RadioLabeling& labeling);

// Labeling file: one "vertex label" line per vertex, '#' comments and blank
// lines ignored. Vertex ids must cover 0..n-1 exactly once.
RadioLabeling parse_labeling(std::istream& in);
RadioLabeling parse_labeling(std::string_view text);
RadioLabeling load_labeling(const std::string& path);
std::string to_text(const RadioLabeling& labeling);

}  // namespace radionum

#endif  // RADIONUM_LABELING_HPP
