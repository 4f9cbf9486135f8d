// Copyright 2026 The Monotree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <string>

#include "doctest.h"
#include "monotree/enumerate.hpp"
#include "support/reference.hpp"

using namespace monotree;

TEST_CASE("tree counts follow shapes times orders times operators") {
  CHECK(count_trees(1) == 1);
  CHECK(count_trees(2) == 8);
  CHECK(count_trees(3) == 192);
  CHECK(count_trees(4) == 7680);
  CHECK(all_trees({5}).size() == 1);
  CHECK(all_trees({0, 1}).size() == 8);
  CHECK(all_trees({0, 1, 2}).size() == 192);
  CHECK(all_trees({2, 4, 7}).size() == 192);
}

TEST_CASE("enumerated trees are valid, distinct, and cover both orders") {
  std::set<std::string> serials;
  for (const Expr& t : all_trees({0, 1, 2})) {
    CHECK(is_valid(t));
    CHECK(serials.insert(to_prefix(t)).second);
  }
  CHECK(serials.size() == 192);
  CHECK(serials.count("(+ q0 (+ q1 q2))"));
  CHECK(serials.count("(- q2 (* q0 q1))"));
}

TEST_CASE("enumeration is deterministic") {
  auto a = all_trees({0, 1, 2});
  auto b = all_trees({0, 1, 2});
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("the filter prunes before the visitor sees a tree") {
  int visited = 0;
  enumerate_trees({0, 1, 2}, [&](const Expr& t) {
    CHECK(is_monotonic(t));
    ++visited;
  }, [](const Expr& t) { return is_monotonic(t); });
  CHECK(visited > 0);
  CHECK(visited < 192);
}

TEST_CASE("two-leaf monotone trees reduce to six canonical classes") {
  std::set<std::string> canon;
  enumerate_trees({0, 1}, [&](const Expr& t) {
    canon.insert(to_prefix(canonicalize(t)));
  }, [](const Expr& t) { return is_monotonic(t); });
  std::set<std::string> expected{"(+ q0 q1)", "(- q0 q1)", "(- q1 q0)",
                                 "(* q0 q1)", "(/ q0 q1)", "(/ q1 q0)"};
  CHECK(canon == expected);
}

TEST_CASE("enumeration rejects oversized or empty index sets") {
  CHECK_THROWS_AS(all_trees({0, 1, 2, 3, 4, 5, 6}), TooManyQuantitiesError);
  CHECK_THROWS_AS(all_trees({}), std::invalid_argument);
}
