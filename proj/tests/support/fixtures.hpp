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

#ifndef RADIONUM_TESTS_FIXTURES_HPP
#define RADIONUM_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "radionum/compositions.hpp"
#include "radionum/random_tree.hpp"
#include "radionum/tree.hpp"

namespace fixtures {

inline radionum::Tree path(int p) { return radionum::make_path(p); }
inline radionum::Tree star(int leaves) { return radionum::make_kstar(leaves); }

inline oracle::Edges edges_of(const radionum::Tree& t) {
  oracle::Edges out;
  for (const auto& e : t.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// A 6-vertex tree whose radio number (11) exceeds its level bound (10),
// found by cross-checking the brute-force oracle against the bound on the
// seeded corpus.
inline radionum::Tree bound_strict_tree() {
  return radionum::Tree::from_edges(6, {{0, 2}, {1, 3}, {3, 5}, {4, 2}, {2, 5}});
}

// Seeded corpus of random trees with orders uniform in [lo, hi].
inline std::vector<radionum::Tree> corpus(std::uint64_t seed, int count, int lo,
                                          int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(lo, hi);
  std::vector<radionum::Tree> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(radionum::random_tree(order(rng), rng));
  return out;
}

}  // namespace fixtures

#endif  // RADIONUM_TESTS_FIXTURES_HPP
