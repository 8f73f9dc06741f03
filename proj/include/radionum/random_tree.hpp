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

#ifndef RADIONUM_RANDOM_TREE_HPP
#define RADIONUM_RANDOM_TREE_HPP

#include <cstdint>
#include <random>

#include "radionum/tree.hpp"

namespace radionum {

// Uniformly random labelled tree on `order` vertices (Pruefer decoding).
// Fully determined by the generator state.
Tree random_tree(int order, std::mt19937_64& rng);

// Convenience overload seeding a fresh generator.
Tree random_tree(int order, std::uint64_t seed);

}  // namespace radionum

#endif  // RADIONUM_RANDOM_TREE_HPP
