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

#include "radionum/compositions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "radionum/error.hpp"
#include "radionum/metrics.hpp"

namespace radionum {

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::kWK:
      return "wk";
    case Family::kSK:
      return "sk";
    case Family::kDK:
      return "dk";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "wk") return Family::kWK;
  if (lower == "sk") return Family::kSK;
  if (lower == "dk") return Family::kDK;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown family '" + std::string(name) + "' (expected wk, sk or dk)");
}

Tree make_kstar(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k-star needs k >= 1");
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= k; ++leaf) edges.push_back({0, leaf});
  return Tree::from_edges(k + 1, std::move(edges));
}

Tree make_kdoublestar(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k-double star needs k >= 1");
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < k; ++i) {
    edges.push_back({0, 2 + i});
    edges.push_back({1, 2 + k + i});
  }
  return Tree::from_edges(2 * k + 2, std::move(edges));
}

namespace {

int unique_center(const Tree& base, std::size_t index) {
  const auto centers = weight_centers(base);
  if (centers.size() != 1) {
    throw Error(ErrorCode::kRefused,
                "base " + std::to_string(index) +
                    " has two weight centers; compositions glue at a unique "
                    "weight center");
  }
  return centers.front();
}

// Incrementally assembles a composed tree and its provenance.
class Builder {
 public:
  int add_hub() {
    provenance_.push_back({});
    return static_cast<int>(provenance_.size()) - 1;
  }

  // Copies `base` into the composed tree. If `glue_to` is set, the base's
  // center becomes that existing vertex; otherwise the center is added as a
  // fresh vertex (first in the block). Returns the composed id of the center.
  int add_copy(const Tree& base, int base_index, int center, int glue_to = -1) {
    std::vector<int> id(base.order(), -1);
    if (glue_to >= 0) {
      id[center] = glue_to;
    } else {
      id[center] = static_cast<int>(provenance_.size());
      provenance_.push_back({base_index, center});
    }
    for (int v = 0; v < base.order(); ++v) {
      if (v == center) continue;
      id[v] = static_cast<int>(provenance_.size());
      provenance_.push_back({base_index, v});
    }
    for (const auto& e : base.edges()) edges_.push_back({id[e.u], id[e.v]});
    return id[center];
  }

  void connect(int u, int v) { edges_.push_back({u, v}); }

  Tree build() const {
    return Tree::from_edges(static_cast<int>(provenance_.size()), edges_);
  }
  std::vector<Provenance> provenance() const { return provenance_; }

 private:
  std::vector<Provenance> provenance_;
  std::vector<Edge> edges_;
};

Composition finish(Family family, int k, std::vector<Tree> bases,
                   std::vector<int> centers, const Builder& builder,
                   std::vector<int> hubs) {
  Composition comp{family,          k,
                   std::move(bases), std::move(centers),
                   builder.build(), builder.provenance(),
                   std::move(hubs)};
  if (weight_centers(comp.tree) != comp.hubs) {
    throw std::logic_error(std::string("composed ") + to_string(family) +
                           " tree has unexpected weight centers");
  }
  return comp;
}

}  // namespace

Composition compose_wk(std::vector<Tree> bases) {
  const int k = static_cast<int>(bases.size());
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "wk composition needs k >= 2 bases");
  std::vector<int> centers;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    centers.push_back(unique_center(bases[i], i));
  }
  Builder b;
  const int w = b.add_hub();
  for (int i = 0; i < k; ++i) b.add_copy(bases[i], i, centers[i], w);
  return finish(Family::kWK, k, std::move(bases), std::move(centers), b, {w});
}

Composition compose_sk(const Tree& base, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "sk composition needs k >= 2");
  const int c = unique_center(base, 0);
  Builder b;
  const int w = b.add_hub();
  for (int i = 0; i < k; ++i) b.connect(w, b.add_copy(base, i, c));
  return finish(Family::kSK, k, {base}, {c}, b, {w});
}

Composition compose_dk(const Tree& base, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "dk composition needs k >= 1");
  const int c = unique_center(base, 0);
  Builder b;
  const int w = b.add_hub();
  const int w2 = b.add_hub();
  b.connect(w, w2);
  for (int i = 0; i < 2 * k; ++i) {
    b.connect(i < k ? w : w2, b.add_copy(base, i, c));
  }
  return finish(Family::kDK, k, {base}, {c}, b, {w, w2});
}

std::int64_t predicted_rn(const Composition& comp,
                          std::span<const std::int64_t> base_rns,
                          int composed_diameter) {
  const std::int64_t d = composed_diameter;
  const std::int64_t k = comp.k;
  if (comp.family == Family::kWK) {
    if (base_rns.size() != comp.bases.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "need one radio number per wk base");
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < comp.bases.size(); ++i) {
      const std::int64_t n = comp.bases[i].order();
      const std::int64_t di = comp.bases[i].max_distance();
      total += base_rns[i] + (n - 1) * (d - di);
    }
    return total - k + 1;
  }
  if (base_rns.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need exactly one base radio number");
  }
  const std::int64_t rn = base_rns[0];
  const std::int64_t n0 = comp.bases[0].order();
  const std::int64_t d0 = comp.bases[0].max_distance();
  if (comp.family == Family::kSK) {
    return k * (rn + n0 * (d - d0 - 2) + d0) + 1;
  }
  return 2 * k * (rn + n0 * (d - d0 - 3) + d0) + d;
}

PredictionReport reconcile(const Composition& comp,
                           const ReconcileOptions& options) {
  PredictionReport report;
  for (std::size_t i = 0; i < comp.bases.size(); ++i) {
    const Tree& base = comp.bases[i];
    if (base.order() < 3) {
      throw Error(ErrorCode::kNotAttained,
                  "base " + std::to_string(i) +
                      " has diameter < 2; no certificate ordering exists");
    }
    const auto prof = profile(base);
    const auto outcome = search_ordering(base, prof, options.budget);
    if (outcome.status == SearchStatus::kBudgetExceeded) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "certificate search on base " + std::to_string(i) +
                      " exceeded its budget");
    }
    if (outcome.status == SearchStatus::kExhausted) {
      throw Error(ErrorCode::kNotAttained,
                  "base " + std::to_string(i) +
                      " does not attain its level lower bound, so the "
                      "composition result does not apply");
    }
    report.base_rns.push_back(outcome.labeling->span());
  }
  if (comp.family == Family::kWK) {
    report.exploratory = std::any_of(
        comp.bases.begin(), comp.bases.end(),
        [&](const Tree& t) { return t.order() != comp.bases[0].order(); });
  }

  const Tree& tree = comp.tree;
  const auto prof = profile(tree);
  report.order = tree.order();
  report.diameter = prof.diameter;
  report.predicted = predicted_rn(comp, report.base_rns, prof.diameter);
  report.bound = level_lower_bound(tree, prof);

  const auto outcome = search_ordering(tree, prof, options.budget);
  report.search_status = outcome.status;
  if (outcome.labeling) report.search_span = outcome.labeling->span();

  if (tree.order() <= options.cap) {
    ExactOptions exact_opts;
    exact_opts.cap = options.cap;
    exact_opts.budget = options.budget;
    exact_opts.incumbent = outcome.labeling ? &*outcome.labeling : nullptr;
    report.exact = exact_rn(tree, exact_opts).rn;
  }
  return report;
}

std::string provenance_text(const Composition& comp) {
  std::ostringstream out;
  for (std::size_t v = 0; v < comp.provenance.size(); ++v) {
    const auto& prov = comp.provenance[v];
    if (prov.is_hub()) {
      out << v << " hub\n";
    } else {
      out << v << ' ' << prov.base << ' ' << prov.vertex << '\n';
    }
  }
  return out.str();
}

}  // namespace radionum
