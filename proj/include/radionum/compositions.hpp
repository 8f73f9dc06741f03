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

#ifndef RADIONUM_COMPOSITIONS_HPP
#define RADIONUM_COMPOSITIONS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radionum/solvers.hpp"
#include "radionum/tree.hpp"

namespace radionum {

// WK: k trees glued at their weight centers.
// SK: k copies of a tree, each weight center glued to a leaf of a k-star.
// DK: 2k copies glued to the leaves of a k-double star.
enum class Family { kWK, kSK, kDK };

const char* to_string(Family family) noexcept;
// Accepts "wk", "sk", "dk" (case-insensitive).
Family parse_family(std::string_view name);

// Where a composed vertex came from. Hub vertices (star or double-star
// centers, or the merged vertex of a WK composition) have base == -1.
struct Provenance {
  int base = -1;
  int vertex = -1;

  bool is_hub() const noexcept { return base < 0; }
};

struct Composition {
  Family family = Family::kWK;
  int k = 0;
  std::vector<Tree> bases;  // WK: k trees; SK/DK: the single base tree
  std::vector<int> base_centers;
  Tree tree;
  std::vector<Provenance> provenance;  // indexed by composed vertex
  // Expected weight centers of `tree`: {0} for WK/SK, {0, 1} for DK.
  std::vector<int> hubs;
};

// Star with center 0 and leaves 1..k.
Tree make_kstar(int k);
// Adjacent hubs 0 and 1; leaves 2..k+1 on 0 and k+2..2k+1 on 1.
Tree make_kdoublestar(int k);

// Composed vertex 0 is the merged weight center; then each base's other
// vertices in base order. Order: sum n_i - k + 1.
Composition compose_wk(std::vector<Tree> bases);
// Hub 0; copy i occupies a contiguous id block starting with its center,
// which is leaf i of the star. Order: k n_0 + 1.
Composition compose_sk(const Tree& base, int k);
// Hubs 0 and 1; copies 0..k-1 hang from 0, copies k..2k-1 from 1.
// Order: 2(k n_0 + 1).
Composition compose_dk(const Tree& base, int k);

// Closed-form radio number of the composed tree from the bases' radio
// numbers; base_rns has one entry per WK base, or one entry for SK/DK.
// composed_diameter must be measured on the constructed tree.
std::int64_t predicted_rn(const Composition& comp,
                          std::span<const std::int64_t> base_rns,
                          int composed_diameter);

struct PredictionReport {
  int order = 0;
  int diameter = 0;
  std::vector<std::int64_t> base_rns;
  std::int64_t predicted = 0;
  std::int64_t bound = 0;
  SearchStatus search_status = SearchStatus::kExhausted;
  std::optional<std::int64_t> search_span;
  std::optional<std::int64_t> exact;  // absent when order > cap
  bool exploratory = false;  // WK with bases of unequal order

  bool predicted_matches_bound() const { return predicted == bound; }
  bool search_matches_prediction() const {
    return search_span && *search_span == predicted;
  }
  std::optional<bool> exact_matches_prediction() const {
    if (!exact) return std::nullopt;
    return *exact == predicted;
  }
  bool all_agree() const {
    return predicted_matches_bound() && search_matches_prediction() &&
           exact_matches_prediction().value_or(true);
  }
};

struct ReconcileOptions {
  int cap = kDefaultExactCap;
  std::uint64_t budget = kDefaultBudget;
};

// Certifies every base (Error(kNotAttained) if a base has no certificate
// ordering, Error(kBudgetExceeded) if undecided), then evaluates the
// prediction, the level bound, the certificate search and, within the cap,
// the exact oracle on the composed tree.
PredictionReport reconcile(const Composition& comp,
                           const ReconcileOptions& options = {});

// Sidecar lines "composed_id base_index base_id" or "composed_id hub".
std::string provenance_text(const Composition& comp);

}  // namespace radionum

#endif  // RADIONUM_COMPOSITIONS_HPP
