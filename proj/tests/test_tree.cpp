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
#include <string>

#include "doctest.h"
#include "radionum/compositions.hpp"
#include "radionum/error.hpp"
#include "radionum/tree.hpp"
#include "support/fixtures.hpp"

using radionum::Error;
using radionum::ErrorCode;
using radionum::parse_tree;
using radionum::Tree;

namespace {

// Returns the error message, failing the test when nothing is thrown.
std::string parse_error(const std::string& text, ErrorCode expected = ErrorCode::kParse) {
  try {
    parse_tree(text);
  } catch (const Error& e) {
    CHECK(e.code() == expected);
    return e.what();
  }
  FAIL("expected a parse error for: " << text);
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse_tree builds paths") {
  const Tree p3 = parse_tree("3\n0 1\n1 2");
  CHECK(p3.order() == 3);
  CHECK(p3.distance(0, 2) == 2);
  CHECK(p3.distance(0, 1) == 1);

  const Tree p4 = parse_tree("4\n0 1\n1 2\n2 3");
  CHECK(radionum::diameter(p4) == 3);
  CHECK(p4.distance(0, 3) == 3);
}

TEST_CASE("parse_tree skips comments and blank lines") {
  const Tree t = parse_tree("# a star\n\n4\n  # leaves\n0 1\n\n0 2\n0 3\n");
  CHECK(t.order() == 4);
  CHECK(t.degree(0) == 3);
}

TEST_CASE("parse_tree rejects bad input with line numbers") {
  CHECK(contains(parse_error("4\n0 1\n1 2\n2 0"), "line 4: cycle detected"));
  CHECK(contains(parse_error("3\n0 1\n0 1"), "line 3: duplicate edge"));
  CHECK(contains(parse_error("3\n0 1\n1 0"), "line 3: duplicate edge"));
  CHECK(contains(parse_error("3\n0 0\n1 2"), "line 2: self-loop"));
  CHECK(contains(parse_error("3\n0 1\n1 7"), "line 3: vertex id out of range"));
  CHECK(contains(parse_error("3\n0 1\n1 -2"), "line 3: vertex id out of range"));
  CHECK(contains(parse_error("3\n0 1\nzero two"), "line 3: malformed edge"));
  CHECK(contains(parse_error("3\n0 1 2\n1 2"), "line 2: malformed edge"));
  CHECK(contains(parse_error("three\n0 1"), "line 1: malformed vertex count"));
  CHECK(contains(parse_error("4\n0 1\n2 3"), "disconnected"));
  CHECK(contains(parse_error("3\n0 1\n1 2\n0 2"), "line 4: too many edges"));
  CHECK(contains(parse_error("# nothing\n"), "empty input"));
}

TEST_CASE("single vertex parses but has no diameter") {
  const Tree t = parse_tree("1\n");
  CHECK(t.order() == 1);
  CHECK(t.max_distance() == 0);
  CHECK_THROWS_AS(radionum::diameter(t), Error);
}

TEST_CASE("all_pairs_distances on small trees") {
  const Tree star = fixtures::star(3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      CHECK(star.distance(i, j) == (i == j ? 0 : 2));
    }
  }
  const Tree p4 = fixtures::path(4);
  CHECK(radionum::all_pairs_distances(p4)[0 * 4 + 3] == 3);
}

TEST_CASE("diameter of stars and composed trees") {
  CHECK(radionum::diameter(fixtures::star(4)) == 2);
  // Oracle: Floyd-Warshall on the composed edge list.
  const Tree td1 = radionum::compose_dk(fixtures::path(3), 1).tree;
  CHECK(oracle::diameter(oracle::distances(td1.order(), fixtures::edges_of(td1))) == 5);
  CHECK(radionum::diameter(td1) == 5);
}

TEST_CASE("distance matrix invariants on random trees") {
  for (const Tree& t : fixtures::corpus(101, 200, 1, 40)) {
    const int p = t.order();
    REQUIRE(static_cast<int>(t.edges().size()) == p - 1);
    const auto fresh = radionum::all_pairs_distances(t);
    for (int u = 0; u < p; ++u) {
      const auto row = radionum::bfs_distances(t, u);
      for (int v = 0; v < p; ++v) {
        CHECK(t.distance(u, v) == t.distance(v, u));
        CHECK(t.distance(u, v) == row[v]);
        CHECK(fresh[u * p + v] == row[v]);
        CHECK((t.distance(u, v) == 1) == (std::find(t.neighbors(u).begin(),
                                                    t.neighbors(u).end(),
                                                    v) != t.neighbors(u).end()));
      }
      CHECK(t.distance(u, u) == 0);
    }
  }
}

TEST_CASE("matrix diameter equals double sweep on 1000 random trees") {
  for (const Tree& t : fixtures::corpus(202, 1000, 2, 50)) {
    const auto s = radionum::stats(t);
    CHECK(s.diameter == radionum::diameter_double_sweep(t));
    CHECK(s.diameter == *std::max_element(s.eccentricity.begin(), s.eccentricity.end()));
    CHECK(s.diameter >= 1);
  }
}

TEST_CASE("text round trip and relabeling") {
  for (const Tree& t : fixtures::corpus(303, 50, 1, 30)) {
    const Tree back = parse_tree(radionum::to_text(t));
    CHECK(radionum::to_text(back) == radionum::to_text(t));
  }
  const Tree p3 = fixtures::path(3);
  const std::vector<int> perm{2, 0, 1};
  const Tree q = radionum::relabel(p3, perm);
  CHECK(q.distance(2, 1) == 2);  // old endpoints 0 and 2
}

TEST_CASE("dot export") {
  const Tree p3 = fixtures::path(3);
  const std::string plain = radionum::to_dot(p3);
  CHECK(contains(plain, "graph T {"));
  CHECK(contains(plain, "0 -- 1;"));
  const std::vector<long long> labels{2, 0, 3};
  const std::string annotated = radionum::to_dot(p3, std::span<const long long>(labels));
  CHECK(contains(annotated, "0 [label=\"0:2\"]"));
  CHECK(contains(annotated, "2 [label=\"2:3\"]"));
}

TEST_CASE("random_tree is seed-deterministic") {
  CHECK(radionum::to_text(radionum::random_tree(20, 7)) ==
        radionum::to_text(radionum::random_tree(20, 7)));
  CHECK(radionum::random_tree(1, 3).order() == 1);
}
