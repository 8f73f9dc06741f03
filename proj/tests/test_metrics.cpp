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

#include <algorithm>
#include <queue>

#include "doctest.h"
#include "radionum/compositions.hpp"
#include "radionum/error.hpp"
#include "radionum/metrics.hpp"
#include "support/fixtures.hpp"

using radionum::profile;
using radionum::Tree;
using radionum::TreeProfile;

TEST_CASE("profile of P3") {
  const auto prof = profile(fixtures::path(3));
  CHECK(prof.centers == std::vector<int>{1});
  CHECK(prof.epsilon == 1);
  CHECK(prof.levels == std::vector<int>{1, 0, 1});
  CHECK(prof.total_level == 2);
  CHECK(prof.tree_weight == 2);
  CHECK(prof.branch_of == std::vector<int>{0, radionum::kNoBranch, 2});
}

TEST_CASE("profile of P4 has two adjacent centers") {
  const auto prof = profile(fixtures::path(4));
  CHECK(prof.weights == std::vector<std::int64_t>{6, 4, 4, 6});
  CHECK(prof.centers == std::vector<int>{1, 2});
  CHECK(prof.epsilon == 0);
  CHECK(prof.levels == std::vector<int>{1, 0, 0, 1});
  CHECK(prof.total_level == 2);
  CHECK(prof.center_of == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("profile of K_{1,4}") {
  const auto prof = profile(fixtures::star(4));
  CHECK(prof.centers == std::vector<int>{0});
  CHECK(prof.epsilon == 1);
  CHECK(prof.total_level == 4);
  CHECK(prof.tree_weight == 4);
}

TEST_CASE("profile needs two vertices") {
  CHECK_THROWS_AS(profile(fixtures::path(1)), radionum::Error);
  const auto p2 = profile(fixtures::path(2));
  CHECK(p2.centers.size() == 2);
  CHECK_THROWS_AS(radionum::level_lower_bound(fixtures::path(2), p2), radionum::Error);
  CHECK_THROWS_AS(radionum::weight_lower_bound(fixtures::path(2), p2), radionum::Error);
}

TEST_CASE("lower bounds on the worked examples") {
  const Tree p3 = fixtures::path(3);
  const Tree p4 = fixtures::path(4);
  const Tree k14 = fixtures::star(4);
  CHECK(radionum::weight_lower_bound(p3, profile(p3)) == 3);
  CHECK(radionum::weight_lower_bound(p4, profile(p4)) == 5);
  CHECK(radionum::weight_lower_bound(k14, profile(k14)) == 5);
  CHECK(radionum::level_lower_bound(p4, profile(p4)) == 5);
  CHECK(radionum::level_lower_bound(k14, profile(k14)) == 5);

  const Tree td1 = radionum::compose_dk(fixtures::path(3), 1).tree;
  const auto prof = profile(td1);
  CHECK(td1.order() == 8);
  CHECK(prof.diameter == 5);
  CHECK(prof.epsilon == 0);
  CHECK(prof.total_level == 10);
  CHECK(radionum::level_lower_bound(td1, prof) == 15);
}

TEST_CASE("weight centers are the centroids and split evenly (1000 random trees)") {
  int two_center = 0;
  for (const Tree& t : fixtures::corpus(404, 1000, 4, 50)) {
    const auto prof = profile(t);
    const auto edges = fixtures::edges_of(t);
    REQUIRE((prof.centers.size() == 1 || prof.centers.size() == 2));
    CHECK(prof.centers == oracle::centroids(t.order(), edges));
    CHECK(prof.centers == radionum::weight_centers(t));
    CHECK(prof.epsilon == (prof.centers.size() == 1 ? 1 : 0));
    if (prof.centers.size() == 2) {
      ++two_center;
      const int a = prof.centers[0], b = prof.centers[1];
      CHECK(t.adjacent(a, b));
      const auto [na, nb] = oracle::split_sizes(t.order(), edges, a, b);
      CHECK(na == nb);
      CHECK(t.order() % 2 == 0);
    }
  }
  CHECK(two_center > 0);
}

TEST_CASE("profile invariants (random trees)") {
  for (const Tree& t : fixtures::corpus(505, 500, 3, 50)) {
    const auto prof = profile(t);
    const int p = t.order();
    std::int64_t sum = 0;
    for (int u = 0; u < p; ++u) {
      int nearest = p;
      for (int c : prof.centers) nearest = std::min(nearest, t.distance(u, c));
      CHECK(prof.levels[u] == nearest);
      CHECK((prof.levels[u] == 0) ==
            (std::find(prof.centers.begin(), prof.centers.end(), u) != prof.centers.end()));
      sum += prof.levels[u];
      for (int v : t.neighbors(u)) CHECK(std::abs(prof.levels[u] - prof.levels[v]) <= 1);

      // Branch root is constant along the path up to the center.
      if (prof.branch_of[u] != radionum::kNoBranch) {
        const int center = prof.centers[prof.center_of[u]];
        CHECK(t.adjacent(prof.branch_of[u], center));
        for (int x = 0; x < p; ++x) {
          const bool on_path = t.distance(center, x) + t.distance(x, u) == t.distance(center, u);
          if (on_path && x != center) CHECK(prof.branch_of[x] == prof.branch_of[u]);
        }
      } else {
        CHECK(prof.levels[u] == 0);
      }
    }
    CHECK(prof.total_level == sum);
    if (prof.epsilon == 1) {
      CHECK(prof.weights[prof.centers[0]] == prof.total_level);
    } else {
      CHECK(prof.tree_weight == prof.total_level + p / 2);
    }
  }
}

TEST_CASE("the two lower bounds agree exactly (1000 random trees)") {
  for (const Tree& t : fixtures::corpus(606, 1000, 4, 50)) {
    const auto prof = profile(t);
    if (prof.diameter < 2) continue;
    CHECK(radionum::weight_lower_bound(t, prof) == radionum::level_lower_bound(t, prof));
  }
}
