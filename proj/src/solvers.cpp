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

#include "radionum/solvers.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "radionum/error.hpp"

namespace radionum {

const char* to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::kFound:
      return "FOUND";
    case SearchStatus::kExhausted:
      return "EXHAUSTED";
    case SearchStatus::kBudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

namespace {

// Two consecutive vertices must lie in different branches (opposite sides
// for two centers): d(a,b) = L(a) + L(b) + 1 - eps.
bool may_follow(const Tree& tree, const TreeProfile& prof, int prev, int next) {
  return tree.distance(prev, next) >=
         prof.levels[prev] + prof.levels[next] + 1 - prof.epsilon;
}

class CertificateSearch {
 public:
  CertificateSearch(const Tree& tree, const TreeProfile& prof,
                    std::uint64_t budget, std::uint64_t spent)
      : tree_(tree),
        prof_(prof),
        p_(tree.order()),
        budget_(budget),
        nodes_(spent),
        step_(prof.diameter + prof.epsilon),
        need_(prof.diameter + 1),
        order_(p_, -1),
        placed_(p_, 0),
        prefix_(p_ + 1, 0) {}

  SearchStatus run() {
    const int first = prof_.centers.front();
    if (prof_.centers.size() == 2) {
      // Reversing a certificate yields a certificate, so the lower-id
      // center can always go first.
      reserved_last_ = prof_.centers[1];
    } else {
      free_center_neighbors_ = tree_.degree(first);
    }
    place(0, first);
    const bool found = extend(1);
    if (found) return SearchStatus::kFound;
    return aborted_ ? SearchStatus::kBudgetExceeded : SearchStatus::kExhausted;
  }

  VertexOrdering ordering() const { return VertexOrdering(order_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool single_center() const { return prof_.centers.size() == 1; }

  void place(int pos, int v) {
    order_[pos] = v;
    placed_[v] = 1;
    prefix_[pos + 1] = prefix_[pos] + prof_.levels[v];
    if (single_center() && tree_.adjacent(v, prof_.centers[0])) {
      --free_center_neighbors_;
    }
  }

  void unplace(int pos) {
    const int v = order_[pos];
    placed_[v] = 0;
    order_[pos] = -1;
    if (single_center() && tree_.adjacent(v, prof_.centers[0])) {
      ++free_center_neighbors_;
    }
  }

  // Pairwise condition between position `pos` (holding v, not yet placed)
  // and every earlier position, nearest first.
  bool fits(int pos, int v) const {
    const std::int64_t lv = prof_.levels[v];
    for (int i = pos - 1; i >= 0; --i) {
      // prefix_[pos+1] would include v; add its level explicitly.
      const std::int64_t level_sum = (prefix_[pos] - prefix_[i]) +
                                     (prefix_[pos] + lv - prefix_[i + 1]);
      const std::int64_t rhs = level_sum - (pos - i) * step_ + need_;
      if (tree_.distance(order_[i], v) < rhs) return false;
    }
    return true;
  }

  bool extend(int pos) {
    if (pos == p_) return true;
    const bool last = pos == p_ - 1;
    if (last && reserved_last_ >= 0) {
      return try_vertex(pos, reserved_last_);
    }
    for (int v = 0; v < p_; ++v) {
      if (placed_[v] || v == reserved_last_) continue;
      if (single_center()) {
        const bool center_nb = tree_.adjacent(v, prof_.centers[0]);
        if (last && !center_nb) continue;
        // Keep one neighbor of the center for the final position.
        if (!last && center_nb && free_center_neighbors_ == 1) continue;
      }
      if (try_vertex(pos, v)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool try_vertex(int pos, int v) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (!may_follow(tree_, prof_, order_[pos - 1], v) || !fits(pos, v)) {
      return false;
    }
    place(pos, v);
    if (extend(pos + 1)) return true;
    unplace(pos);
    return false;
  }

  const Tree& tree_;
  const TreeProfile& prof_;
  const int p_;
  const std::uint64_t budget_;
  std::uint64_t nodes_;
  const std::int64_t step_;
  const std::int64_t need_;
  std::vector<int> order_;
  std::vector<char> placed_;
  std::vector<std::int64_t> prefix_;
  int reserved_last_ = -1;
  int free_center_neighbors_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::optional<VertexOrdering> greedy_ordering(const Tree& tree,
                                              const TreeProfile& prof) {
  const int p = tree.order();
  const bool single = prof.centers.size() == 1;
  const int w = prof.centers.front();
  const int reserved = single ? -1 : prof.centers[1];

  std::vector<char> placed(p, 0);
  std::vector<int> remaining(p, 0);  // unplaced count per branch root
  for (int v = 0; v < p; ++v) {
    if (prof.branch_of[v] != kNoBranch) ++remaining[prof.branch_of[v]];
  }
  int free_center_neighbors = single ? tree.degree(w) : 0;

  std::vector<int> order{w};
  placed[w] = 1;
  const int middle_end = single ? p : p - 1;
  while (static_cast<int>(order.size()) < middle_end) {
    const int prev = order.back();
    const bool last = static_cast<int>(order.size()) == p - 1;
    int best = -1;
    for (int v = 0; v < p; ++v) {
      if (placed[v] || v == reserved || !may_follow(tree, prof, prev, v)) {
        continue;
      }
      if (single) {
        const bool center_nb = tree.adjacent(v, w);
        if (last && !center_nb) continue;
        if (!last && center_nb && free_center_neighbors == 1) continue;
      }
      if (best < 0) {
        best = v;
        continue;
      }
      const int rb = remaining[prof.branch_of[best]];
      const int rv = remaining[prof.branch_of[v]];
      if (rv > rb || (rv == rb && prof.levels[v] > prof.levels[best])) best = v;
    }
    if (best < 0) return std::nullopt;
    placed[best] = 1;
    --remaining[prof.branch_of[best]];
    if (single && tree.adjacent(best, w)) --free_center_neighbors;
    order.push_back(best);
  }
  if (!single) order.push_back(reserved);

  VertexOrdering candidate(std::move(order));
  if (!ordering_valid(tree, prof, candidate)) return std::nullopt;
  return candidate;
}

SearchOutcome search_ordering(const Tree& tree, const TreeProfile& prof,
                              std::uint64_t budget) {
  if (prof.diameter < 2) {
    throw Error(ErrorCode::kDomain, "certificate search requires diameter >= 2");
  }
  SearchOutcome out;
  // Greedy cost: one node per placed vertex.
  out.nodes_explored = static_cast<std::uint64_t>(tree.order());
  if (out.nodes_explored > budget) {
    out.status = SearchStatus::kBudgetExceeded;
    return out;
  }
  if (auto greedy = greedy_ordering(tree, prof)) {
    out.status = SearchStatus::kFound;
    out.labeling = label_from_ordering(tree, prof, *greedy);
    out.ordering = std::move(greedy);
    return out;
  }

  CertificateSearch search(tree, prof, budget, out.nodes_explored);
  out.status = search.run();
  out.nodes_explored = search.nodes();
  if (out.status == SearchStatus::kFound) {
    out.ordering = search.ordering();
    out.labeling = label_from_ordering(tree, prof, *out.ordering);
  }
  return out;
}

RadioLabeling greedy_labels(const Tree& tree, const VertexOrdering& order) {
  const std::int64_t need = tree.max_distance() + 1;
  std::vector<std::int64_t> labels(tree.order(), 0);
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::int64_t f = 0;
    for (std::size_t i = 0; i < k; ++i) {
      f = std::max(f, labels[order[i]] + need - tree.distance(order[i], order[k]));
    }
    labels[order[k]] = f;
  }
  return RadioLabeling(std::move(labels));
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Tree& tree, std::uint64_t budget, std::int64_t incumbent)
      : tree_(tree),
        p_(tree.order()),
        need_(tree.max_distance() + 1),
        budget_(budget),
        best_(incumbent),
        labels_(p_, 0),
        placed_(p_, 0),
        order_(p_, -1) {}

  // True when an ordering with span < incumbent was found; best_labels()
  // then holds the best one.
  bool run() {
    descend(0, 0);
    if (aborted_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "exact search exceeded its node budget of " +
                      std::to_string(budget_));
    }
    return improved_;
  }

  std::int64_t best() const { return best_; }
  const std::vector<std::int64_t>& best_labels() const { return best_labels_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void descend(int depth, std::int64_t last_label) {
    if (depth == p_) {
      if (last_label < best_) {
        best_ = last_label;
        best_labels_ = labels_;
        improved_ = true;
      }
      return;
    }
    for (int v = 0; v < p_ && !aborted_; ++v) {
      if (placed_[v]) continue;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return;
      }
      std::int64_t f = 0;
      for (int i = 0; i < depth; ++i) {
        const int u = order_[i];
        f = std::max(f, labels_[u] + need_ - tree_.distance(u, v));
      }
      // Every later vertex adds at least one to the span.
      if (f + (p_ - depth - 1) >= best_) continue;
      labels_[v] = f;
      placed_[v] = 1;
      order_[depth] = v;
      descend(depth + 1, f);
      placed_[v] = 0;
    }
  }

  const Tree& tree_;
  const int p_;
  const std::int64_t need_;
  const std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::int64_t best_;
  bool improved_ = false;
  bool aborted_ = false;
  std::vector<std::int64_t> labels_;
  std::vector<char> placed_;
  std::vector<int> order_;
  std::vector<std::int64_t> best_labels_;
};

RadioLabeling normalized(const RadioLabeling& labeling) {
  const auto labels = labeling.labels();
  const auto lo = *std::min_element(labels.begin(), labels.end());
  std::vector<std::int64_t> shifted(labels.begin(), labels.end());
  for (auto& f : shifted) f -= lo;
  return RadioLabeling(std::move(shifted));
}

}  // namespace

ExactResult exact_rn(const Tree& tree, const ExactOptions& options) {
  if (options.cap < 1 || options.budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "cap and budget must be positive");
  }
  if (tree.order() > options.cap) {
    throw Error(ErrorCode::kCapExceeded,
                "tree order " + std::to_string(tree.order()) +
                    " exceeds the exact-solver cap " +
                    std::to_string(options.cap) +
                    "; raise the cap explicitly (search time grows "
                    "factorially)");
  }

  RadioLabeling incumbent;
  if (options.incumbent) {
    if (!verify_radio(tree, *options.incumbent)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "starting incumbent is not a radio labeling");
    }
    incumbent = normalized(*options.incumbent);
  } else {
    std::vector<int> identity(tree.order());
    for (int v = 0; v < tree.order(); ++v) identity[v] = v;
    incumbent = greedy_labels(tree, VertexOrdering(std::move(identity)));
  }

  ExactSearch search(tree, options.budget, incumbent.span());
  ExactResult result;
  if (search.run()) {
    result.witness = RadioLabeling(search.best_labels());
  } else {
    result.witness = std::move(incumbent);
  }
  result.rn = result.witness.span();
  result.nodes_explored = search.nodes();
  return result;
}

}  // namespace radionum
