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

#include "radionum/labeling.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "radionum/error.hpp"

namespace radionum {

std::int64_t RadioLabeling::span() const {
  if (labels_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "span of an empty labeling");
  }
  const auto [lo, hi] = std::minmax_element(labels_.begin(), labels_.end());
  return *hi - *lo;
}

std::int64_t span(const RadioLabeling& labeling) { return labeling.span(); }

std::string OrderingVerdict::describe() const {
  switch (clause) {
    case Clause::kNone:
      return "valid";
    case Clause::kNotPermutation:
      return i < 0 ? "not a permutation: wrong length"
                   : "not a permutation: position " + std::to_string(i);
    case Clause::kEndpoints:
      return "endpoint condition fails at position " + std::to_string(i);
    case Clause::kDistance:
      return "distance condition fails for positions (" + std::to_string(i) +
             ", " + std::to_string(j) + ")";
  }
  return "unknown";
}

RadioVerdict verify_radio(const Tree& tree, const RadioLabeling& labeling) {
  if (labeling.size() != static_cast<std::size_t>(tree.order())) {
    throw Error(ErrorCode::kInvalidArgument,
                "labeling has " + std::to_string(labeling.size()) +
                    " entries for a tree of order " +
                    std::to_string(tree.order()));
  }
  const std::int64_t need = tree.max_distance() + 1;
  for (int u = 0; u < tree.order(); ++u) {
    for (int v = u + 1; v < tree.order(); ++v) {
      const std::int64_t gap = labeling[u] > labeling[v]
                                   ? labeling[u] - labeling[v]
                                   : labeling[v] - labeling[u];
      const std::int64_t deficit = need - tree.distance(u, v) - gap;
      if (deficit > 0) return {false, u, v, deficit};
    }
  }
  return {};
}

OrderingVerdict ordering_valid(const Tree& tree, const TreeProfile& prof,
                               const VertexOrdering& order) {
  using Clause = OrderingVerdict::Clause;
  const int p = tree.order();
  if (prof.diameter < 2) {
    throw Error(ErrorCode::kDomain, "certificate requires diameter >= 2");
  }
  if (order.size() != static_cast<std::size_t>(p)) {
    return {Clause::kNotPermutation, -1, -1};
  }
  std::vector<char> seen(p, 0);
  for (int i = 0; i < p; ++i) {
    const int v = order[i];
    if (v < 0 || v >= p || seen[v]) return {Clause::kNotPermutation, i, -1};
    seen[v] = 1;
  }

  const int first = order[0];
  const int last = order[p - 1];
  if (prof.centers.size() == 1) {
    const int w = prof.centers[0];
    if (first != w) return {Clause::kEndpoints, 0, -1};
    if (!tree.adjacent(last, w)) return {Clause::kEndpoints, p - 1, -1};
  } else {
    const bool ends_ok =
        (first == prof.centers[0] && last == prof.centers[1]) ||
        (first == prof.centers[1] && last == prof.centers[0]);
    if (!ends_ok) {
      const bool first_ok = prof.is_center(first);
      return {Clause::kEndpoints, first_ok ? p - 1 : 0, -1};
    }
  }

  // prefix[k] = sum of L(u_t) for t < k, so the level sum over the steps
  // i..j-1 is (prefix[j] - prefix[i]) + (prefix[j+1] - prefix[i+1]).
  std::vector<std::int64_t> prefix(p + 1, 0);
  for (int t = 0; t < p; ++t) prefix[t + 1] = prefix[t] + prof.levels[order[t]];
  const std::int64_t step = prof.diameter + prof.epsilon;
  const std::int64_t need = prof.diameter + 1;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const std::int64_t level_sum =
          (prefix[j] - prefix[i]) + (prefix[j + 1] - prefix[i + 1]);
      const std::int64_t rhs = level_sum - (j - i) * step + need;
      if (tree.distance(order[i], order[j]) < rhs) {
        return {Clause::kDistance, i, j};
      }
    }
  }
  return {};
}

RadioLabeling label_from_ordering(const Tree& tree, const TreeProfile& prof,
                                  const VertexOrdering& order) {
  const auto verdict = ordering_valid(tree, prof, order);
  if (!verdict) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a certificate ordering: " + verdict.describe());
  }
  const std::int64_t step = prof.diameter + prof.epsilon;
  std::vector<std::int64_t> labels(tree.order(), 0);
  std::int64_t f = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const std::int64_t gap =
        step - prof.levels[order[i]] - prof.levels[order[i + 1]];
    // Guaranteed by the consecutive-pair distance condition.
    if (gap < 1) {
      throw Error(ErrorCode::kDomain, "non-increasing label step at position " +
                                          std::to_string(i + 1));
    }
    f += gap;
    labels[order[i + 1]] = f;
  }
  return RadioLabeling(std::move(labels));
}

VertexOrdering ordering_of(const RadioLabeling& labeling) {
  std::vector<int> order(labeling.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return labeling[a] < labeling[b]; });
  return VertexOrdering(std::move(order));
}

RadioLabeling parse_labeling(std::istream& in) {
  std::map<long long, std::int64_t> entries;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream fields(raw);
    long long vertex = 0, label = 0;
    std::string extra;
    if (!(fields >> vertex >> label) || (fields >> extra)) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": malformed labeling line '" + raw +
                                         "'");
    }
    if (vertex < 0 || label < 0) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": negative vertex or label");
    }
    if (!entries.emplace(vertex, label).second) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": vertex " + std::to_string(vertex) +
                                         " labelled twice");
    }
  }
  if (entries.empty()) throw Error(ErrorCode::kParse, "empty labeling");
  std::vector<std::int64_t> labels;
  labels.reserve(entries.size());
  long long expected = 0;
  for (const auto& [vertex, label] : entries) {
    if (vertex != expected) {
      throw Error(ErrorCode::kParse,
                  "labeling misses vertex " + std::to_string(expected));
    }
    labels.push_back(label);
    ++expected;
  }
  return RadioLabeling(std::move(labels));
}

RadioLabeling parse_labeling(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_labeling(in);
}

RadioLabeling load_labeling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return parse_labeling(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string to_text(const RadioLabeling& labeling) {
  std::ostringstream out;
  for (std::size_t v = 0; v < labeling.size(); ++v) {
    out << v << ' ' << labeling[static_cast<int>(v)] << '\n';
  }
  return out.str();
}

}  // namespace radionum
