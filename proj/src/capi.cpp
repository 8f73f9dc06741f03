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

#include "radionum/radionum.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "radionum/compositions.hpp"
#include "radionum/error.hpp"
#include "radionum/labeling.hpp"
#include "radionum/metrics.hpp"
#include "radionum/random_tree.hpp"
#include "radionum/solvers.hpp"
#include "radionum/tree.hpp"

struct radionum_tree {
  radionum::Tree tree;
};

struct radionum_labeling {
  radionum::RadioLabeling labeling;
};

struct radionum_composition {
  radionum::Composition comp;
  radionum_tree composed;
};

namespace {

thread_local std::string last_error;

radionum_status to_status(radionum::ErrorCode code) {
  using radionum::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return RADIONUM_ERR_PARSE;
    case ErrorCode::kInvalidArgument:
      return RADIONUM_ERR_INVALID_ARGUMENT;
    case ErrorCode::kDomain:
      return RADIONUM_ERR_DOMAIN;
    case ErrorCode::kRefused:
      return RADIONUM_ERR_REFUSED;
    case ErrorCode::kCapExceeded:
      return RADIONUM_ERR_CAP_EXCEEDED;
    case ErrorCode::kBudgetExceeded:
      return RADIONUM_ERR_BUDGET_EXCEEDED;
    case ErrorCode::kNotAttained:
      return RADIONUM_ERR_NOT_ATTAINED;
    case ErrorCode::kIo:
      return RADIONUM_ERR_IO;
  }
  return RADIONUM_ERR_INTERNAL;
}

radionum_status fail(radionum_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
radionum_status guarded(F&& body) noexcept {
  try {
    body();
    return RADIONUM_OK;
  } catch (const radionum::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RADIONUM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RADIONUM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RADIONUM_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw radionum::Error(radionum::ErrorCode::kInvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

radionum_search_status to_c(radionum::SearchStatus s) {
  switch (s) {
    case radionum::SearchStatus::kFound:
      return RADIONUM_SEARCH_FOUND;
    case radionum::SearchStatus::kExhausted:
      return RADIONUM_SEARCH_EXHAUSTED;
    case radionum::SearchStatus::kBudgetExceeded:
      return RADIONUM_SEARCH_BUDGET_EXCEEDED;
  }
  return RADIONUM_SEARCH_EXHAUSTED;
}

radionum::VertexOrdering ordering_from(const int* order, std::size_t count) {
  require(order != nullptr || count == 0, "null ordering");
  return radionum::VertexOrdering(std::vector<int>(order, order + count));
}

radionum_tree* wrap(radionum::Tree tree) {
  return new radionum_tree{std::move(tree)};
}

radionum_labeling* wrap(radionum::RadioLabeling labeling) {
  return new radionum_labeling{std::move(labeling)};
}

}  // namespace

extern "C" {

const char* radionum_version(void) { return "0.1.0"; }

const char* radionum_last_error(void) { return last_error.c_str(); }

const char* radionum_status_name(radionum_status status) {
  switch (status) {
    case RADIONUM_OK:
      return "ok";
    case RADIONUM_ERR_PARSE:
      return "parse error";
    case RADIONUM_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case RADIONUM_ERR_DOMAIN:
      return "domain error";
    case RADIONUM_ERR_REFUSED:
      return "refused";
    case RADIONUM_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case RADIONUM_ERR_BUDGET_EXCEEDED:
      return "budget exceeded";
    case RADIONUM_ERR_NOT_ATTAINED:
      return "not attained";
    case RADIONUM_ERR_IO:
      return "i/o error";
    case RADIONUM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void radionum_string_free(char* s) { std::free(s); }

radionum_status radionum_tree_parse(const char* text, radionum_tree** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(radionum::parse_tree(std::string_view(text)));
  });
}

radionum_status radionum_tree_load(const char* path, radionum_tree** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = wrap(radionum::load_tree(path));
  });
}

radionum_status radionum_tree_from_edges(int order, const int* endpoints,
                                         size_t num_edges, radionum_tree** out) {
  return guarded([&] {
    require(out && (endpoints || num_edges == 0), "null argument");
    std::vector<radionum::Edge> edges(num_edges);
    for (size_t i = 0; i < num_edges; ++i) {
      edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    }
    *out = wrap(radionum::Tree::from_edges(order, std::move(edges)));
  });
}

radionum_status radionum_tree_random(int order, uint64_t seed,
                                     radionum_tree** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(radionum::random_tree(order, seed));
  });
}

void radionum_tree_free(radionum_tree* tree) { delete tree; }

int radionum_tree_order(const radionum_tree* tree) {
  return tree ? tree->tree.order() : 0;
}

radionum_status radionum_tree_distance(const radionum_tree* tree, int u, int v,
                                       int* out) {
  return guarded([&] {
    require(tree && out, "null argument");
    const int p = tree->tree.order();
    require(u >= 0 && v >= 0 && u < p && v < p, "vertex out of range");
    *out = tree->tree.distance(u, v);
  });
}

radionum_status radionum_tree_diameter(const radionum_tree* tree, int* out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = radionum::diameter(tree->tree);
  });
}

radionum_status radionum_tree_to_text(const radionum_tree* tree, char** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = copy_string(radionum::to_text(tree->tree));
  });
}

radionum_status radionum_tree_to_dot(const radionum_tree* tree,
                                     const radionum_labeling* labeling,
                                     char** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    std::optional<std::span<const long long>> labels;
    std::vector<long long> copy;
    if (labeling) {
      const auto src = labeling->labeling.labels();
      copy.assign(src.begin(), src.end());
      labels = std::span<const long long>(copy);
    }
    *out = copy_string(radionum::to_dot(tree->tree, labels));
  });
}

radionum_status radionum_tree_profile(const radionum_tree* tree,
                                      radionum_profile* out) {
  return guarded([&] {
    require(tree && out, "null argument");
    const auto prof = radionum::profile(tree->tree);
    out->order = prof.order;
    out->diameter = prof.diameter;
    out->num_centers = static_cast<int>(prof.centers.size());
    out->centers[0] = prof.centers[0];
    out->centers[1] = prof.centers.size() > 1 ? prof.centers[1] : -1;
    out->epsilon = prof.epsilon;
    out->total_level = prof.total_level;
    out->tree_weight = prof.tree_weight;
  });
}

radionum_status radionum_tree_levels(const radionum_tree* tree, int* levels,
                                     size_t capacity) {
  return guarded([&] {
    require(tree && levels, "null argument");
    require(capacity >= static_cast<size_t>(tree->tree.order()),
            "levels buffer too small");
    const auto prof = radionum::profile(tree->tree);
    std::copy(prof.levels.begin(), prof.levels.end(), levels);
  });
}

radionum_status radionum_weight_lower_bound(const radionum_tree* tree,
                                            int64_t* out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = radionum::weight_lower_bound(tree->tree,
                                        radionum::profile(tree->tree));
  });
}

radionum_status radionum_level_lower_bound(const radionum_tree* tree,
                                           int64_t* out) {
  return guarded([&] {
    require(tree && out, "null argument");
    *out = radionum::level_lower_bound(tree->tree,
                                       radionum::profile(tree->tree));
  });
}

radionum_status radionum_labeling_create(const int64_t* labels, size_t count,
                                         radionum_labeling** out) {
  return guarded([&] {
    require(out && labels && count > 0, "null or empty labeling");
    *out = wrap(radionum::RadioLabeling(
        std::vector<std::int64_t>(labels, labels + count)));
  });
}

radionum_status radionum_labeling_parse(const char* text,
                                        radionum_labeling** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(radionum::parse_labeling(std::string_view(text)));
  });
}

radionum_status radionum_labeling_load(const char* path,
                                       radionum_labeling** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = wrap(radionum::load_labeling(path));
  });
}

void radionum_labeling_free(radionum_labeling* labeling) { delete labeling; }

size_t radionum_labeling_size(const radionum_labeling* labeling) {
  return labeling ? labeling->labeling.size() : 0;
}

radionum_status radionum_labeling_get(const radionum_labeling* labeling,
                                      int64_t* labels, size_t capacity) {
  return guarded([&] {
    require(labeling && labels, "null argument");
    const auto src = labeling->labeling.labels();
    require(capacity >= src.size(), "labels buffer too small");
    std::copy(src.begin(), src.end(), labels);
  });
}

radionum_status radionum_labeling_span(const radionum_labeling* labeling,
                                       int64_t* out) {
  return guarded([&] {
    require(labeling && out, "null argument");
    *out = labeling->labeling.span();
  });
}

radionum_status radionum_labeling_to_text(const radionum_labeling* labeling,
                                          char** out) {
  return guarded([&] {
    require(labeling && out, "null argument");
    *out = copy_string(radionum::to_text(labeling->labeling));
  });
}

radionum_status radionum_verify_radio(const radionum_tree* tree,
                                      const radionum_labeling* labeling,
                                      radionum_radio_verdict* out) {
  return guarded([&] {
    require(tree && labeling && out, "null argument");
    const auto v = radionum::verify_radio(tree->tree, labeling->labeling);
    *out = {v.pass ? 1 : 0, v.u, v.v, v.deficit};
  });
}

radionum_status radionum_ordering_check(const radionum_tree* tree,
                                        const int* order, size_t count,
                                        radionum_ordering_verdict* out) {
  return guarded([&] {
    require(tree && out, "null argument");
    const auto prof = radionum::profile(tree->tree);
    const auto v =
        radionum::ordering_valid(tree->tree, prof, ordering_from(order, count));
    *out = {static_cast<radionum_ordering_clause>(v.clause), v.i, v.j};
  });
}

radionum_status radionum_label_from_ordering(const radionum_tree* tree,
                                             const int* order, size_t count,
                                             radionum_labeling** out) {
  return guarded([&] {
    require(tree && out, "null argument");
    const auto prof = radionum::profile(tree->tree);
    *out = wrap(radionum::label_from_ordering(tree->tree, prof,
                                              ordering_from(order, count)));
  });
}

radionum_status radionum_search_ordering(const radionum_tree* tree,
                                         uint64_t budget,
                                         radionum_search_result* out,
                                         int* order, size_t capacity,
                                         radionum_labeling** labeling) {
  return guarded([&] {
    require(tree && out, "null argument");
    require(budget > 0, "budget must be positive");
    const auto prof = radionum::profile(tree->tree);
    auto outcome = radionum::search_ordering(tree->tree, prof, budget);
    out->status = to_c(outcome.status);
    out->nodes_explored = outcome.nodes_explored;
    out->span = outcome.labeling ? outcome.labeling->span() : -1;
    if (labeling) *labeling = nullptr;
    if (outcome.ordering) {
      if (order) {
        require(capacity >= outcome.ordering->size(), "order buffer too small");
        const auto v = outcome.ordering->vertices();
        std::copy(v.begin(), v.end(), order);
      }
      if (labeling) *labeling = wrap(std::move(*outcome.labeling));
    }
  });
}

radionum_status radionum_exact(const radionum_tree* tree, int cap,
                               uint64_t budget,
                               const radionum_labeling* incumbent,
                               radionum_exact_result* out,
                               radionum_labeling** witness) {
  return guarded([&] {
    require(tree && out, "null argument");
    radionum::ExactOptions opts;
    opts.cap = cap;
    opts.budget = budget;
    opts.incumbent = incumbent ? &incumbent->labeling : nullptr;
    auto result = radionum::exact_rn(tree->tree, opts);
    out->rn = result.rn;
    out->nodes_explored = result.nodes_explored;
    if (witness) *witness = wrap(std::move(result.witness));
  });
}

radionum_status radionum_make_kstar(int k, radionum_tree** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(radionum::make_kstar(k));
  });
}

radionum_status radionum_make_kdoublestar(int k, radionum_tree** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = wrap(radionum::make_kdoublestar(k));
  });
}

radionum_status radionum_compose(radionum_family family,
                                 const radionum_tree* const* bases,
                                 size_t count, int k,
                                 radionum_composition** out) {
  return guarded([&] {
    require(out && bases && count > 0, "null argument");
    for (size_t i = 0; i < count; ++i) require(bases[i] != nullptr, "null base");
    std::optional<radionum::Composition> comp;
    switch (family) {
      case RADIONUM_FAMILY_WK: {
        std::vector<radionum::Tree> trees;
        for (size_t i = 0; i < count; ++i) trees.push_back(bases[i]->tree);
        comp = radionum::compose_wk(std::move(trees));
        break;
      }
      case RADIONUM_FAMILY_SK:
        require(count == 1, "sk takes exactly one base tree");
        comp = radionum::compose_sk(bases[0]->tree, k);
        break;
      case RADIONUM_FAMILY_DK:
        require(count == 1, "dk takes exactly one base tree");
        comp = radionum::compose_dk(bases[0]->tree, k);
        break;
      default:
        require(false, "unknown family");
    }
    radionum_tree composed{comp->tree};
    *out = new radionum_composition{std::move(*comp), std::move(composed)};
  });
}

void radionum_composition_free(radionum_composition* comp) { delete comp; }

const radionum_tree* radionum_composition_tree(
    const radionum_composition* comp) {
  return comp ? &comp->composed : nullptr;
}

radionum_status radionum_composition_provenance(
    const radionum_composition* comp, char** out) {
  return guarded([&] {
    require(comp && out, "null argument");
    *out = copy_string(radionum::provenance_text(comp->comp));
  });
}

radionum_status radionum_predicted_rn(const radionum_composition* comp,
                                      const int64_t* base_rns, size_t count,
                                      int composed_diameter, int64_t* out) {
  return guarded([&] {
    require(comp && out && (base_rns || count == 0), "null argument");
    require(count > 0, "missing base radio numbers");
    *out = radionum::predicted_rn(
        comp->comp, std::span<const std::int64_t>(base_rns, count),
        composed_diameter);
  });
}

radionum_status radionum_theorem_check(const radionum_composition* comp,
                                       int cap, uint64_t budget,
                                       radionum_report* out) {
  return guarded([&] {
    require(comp && out, "null argument");
    require(cap > 0 && budget > 0, "cap and budget must be positive");
    const auto r = radionum::reconcile(comp->comp, {cap, budget});
    out->order = r.order;
    out->diameter = r.diameter;
    out->predicted = r.predicted;
    out->bound = r.bound;
    out->search_status = to_c(r.search_status);
    out->has_search_span = r.search_span ? 1 : 0;
    out->search_span = r.search_span.value_or(-1);
    out->has_exact = r.exact ? 1 : 0;
    out->exact = r.exact.value_or(-1);
    out->exploratory = r.exploratory ? 1 : 0;
    out->predicted_matches_bound = r.predicted_matches_bound() ? 1 : 0;
    out->search_matches_prediction = r.search_matches_prediction() ? 1 : 0;
    out->exact_matches_prediction =
        r.exact_matches_prediction().value_or(true) ? 1 : 0;
    out->all_agree = r.all_agree() ? 1 : 0;
  });
}

}  // extern "C"
