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

#include <map>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "monotree/expr.hpp"
#include "support/reference.hpp"

using namespace monotree;
using monotree::testing::RefRational;

TEST_CASE("prefix serialization round-trips") {
  for (const char* text : {"q0", "(+ q0 q1)", "(- (+ (* q0 q1) q2) (+ q3 q4))",
                           "(/ (- q0 q1) q2)", "(* q0 (+ q2 q3))"}) {
    CHECK(to_prefix(parse_prefix(text)) == text);
  }
}

TEST_CASE("prefix parser rejects malformed input") {
  for (const char* text : {"", "q", "qx", "(+ q0)", "(+ q0 q1 q2)", "(% q0 q1)",
                           "(+ q0 q1", "q0 q1", "(+ q0 q1))"}) {
    CHECK_THROWS_AS(parse_prefix(text), ExprParseError);
  }
}

TEST_CASE("evaluation follows the operators") {
  Expr tree = parse_prefix("(* (+ q0 q1) q2)");
  std::map<int, Rational> values{{0, Rational(3)}, {1, Rational(5)}, {2, Rational(9)}};
  CHECK(evaluate(tree, values) == Rational(72));

  Expr diff = parse_prefix("(- q0 q1)");
  CHECK(evaluate(diff, {{0, Rational(2)}, {1, Rational(7)}}) == Rational(-5));

  Expr ratio = parse_prefix("(/ q0 q1)");
  CHECK(evaluate(ratio, {{0, Rational(7)}, {1, Rational(2)}}) ==
        Rational(BigInt(7), BigInt(2)));
}

TEST_CASE("evaluation reports missing leaves and zero division") {
  Expr tree = parse_prefix("(/ q0 q1)");
  CHECK_THROWS_AS(evaluate(tree, {{0, Rational(1)}}), MissingQuantityError);
  CHECK_THROWS_AS(evaluate(tree, {{0, Rational(1)}, {1, Rational(0)}}), DivByZeroError);
  CHECK(!try_evaluate(tree, {{0, Rational(1)}, {1, Rational(0)}}));
  auto ok = try_evaluate(tree, {{0, Rational(6)}, {1, Rational(3)}});
  REQUIRE(ok);
  CHECK(*ok == Rational(2));
}

TEST_CASE("validity means each quantity appears at most once") {
  CHECK(is_valid(parse_prefix("(+ q0 q1)")));
  CHECK(is_valid(parse_prefix("q4")));
  CHECK(!is_valid(parse_prefix("(+ q0 q0)")));
  CHECK(!is_valid(parse_prefix("(* (+ q1 q2) (- q3 q1))")));
}

TEST_CASE("monotonicity edge rules") {
  CHECK(is_monotonic(parse_prefix("(- (+ q0 q1) q2)")));
  CHECK(is_monotonic(parse_prefix("(/ (* q0 q1) q2)")));
  CHECK(!is_monotonic(parse_prefix("(+ (- q0 q1) q2)")));
  CHECK(!is_monotonic(parse_prefix("(- (- q0 q1) q2)")));
  CHECK(!is_monotonic(parse_prefix("(- q0 (- q1 q2))")));
  CHECK(!is_monotonic(parse_prefix("(* (/ q0 q1) q2)")));
  CHECK(!is_monotonic(parse_prefix("(/ q0 (/ q1 q2))")));
  CHECK(is_monotonic(parse_prefix("(+ (* q0 q1) (/ q2 q3))")));
}

TEST_CASE("monotonize canonicalizes a mixed tree") {
  Expr tree = parse_prefix("(+ (* q0 q1) (- q2 (+ q3 q4)))");
  CHECK(!is_monotonic(tree));
  Expr mono = monotonize(tree);
  CHECK(to_prefix(mono) == "(- (+ (* q0 q1) q2) (+ q3 q4))");
  CHECK(is_monotonic(mono));
  CHECK(monotonize(mono) == mono);
}

TEST_CASE("monotonize orders chain terms by least leaf") {
  CHECK(to_prefix(monotonize(parse_prefix("(+ q2 (+ q1 q0))"))) == "(+ (+ q0 q1) q2)");
  CHECK(to_prefix(monotonize(parse_prefix("(* (+ q2 q3) q0)"))) == "(* q0 (+ q2 q3))");
  CHECK(to_prefix(monotonize(parse_prefix("(- q5 (- q1 q4))"))) == "(- (+ q4 q5) q1)");
}

TEST_CASE("chains split signed terms") {
  Expr tree = parse_prefix("(- (+ (* q0 q1) q2) (+ q3 q4))");
  std::vector<Chain> cs = chains(tree);
  const Chain* root_chain = nullptr;
  for (const Chain& c : cs) {
    if (c.top == tree) root_chain = &c;
  }
  REQUIRE(root_chain);
  CHECK(root_chain->kind == ChainKind::AddSub);
  CHECK(root_chain->node_count == 3);
  std::multiset<std::pair<std::string, bool>> seen;
  for (const ChainTerm& t : root_chain->terms) {
    seen.insert({to_prefix(t.term), t.plus_role});
  }
  std::multiset<std::pair<std::string, bool>> expected{
      {"(* q0 q1)", true}, {"q2", true}, {"q3", false}, {"q4", false}};
  CHECK(seen == expected);
}

TEST_CASE("subtracting below a subtraction flips term roles") {
  std::vector<Chain> cs = chains(parse_prefix("(- q5 (- q1 q4))"));
  REQUIRE(cs.size() == 1);
  std::multiset<std::pair<std::string, bool>> seen;
  for (const ChainTerm& t : cs[0].terms) seen.insert({to_prefix(t.term), t.plus_role});
  std::multiset<std::pair<std::string, bool>> expected{
      {"q5", true}, {"q1", false}, {"q4", true}};
  CHECK(seen == expected);
}

TEST_CASE("lca labels name the operation and orientation") {
  Expr tree = parse_prefix("(* (+ q0 q1) q2)");
  LcaMap map = lca_map(tree);
  REQUIRE(map.size() == 3);
  CHECK(map.at({0, 1}) == LcaLabel::Plus);
  CHECK(map.at({0, 2}) == LcaLabel::Times);
  CHECK(map.at({1, 2}) == LcaLabel::Times);

  CHECK(lca_label(parse_prefix("(- q0 q1)"), 0, 1) == LcaLabel::Minus);
  CHECK(lca_label(parse_prefix("(- q1 q0)"), 0, 1) == LcaLabel::MinusReverse);
  CHECK(lca_label(parse_prefix("(/ q0 q1)"), 0, 1) == LcaLabel::Div);
  CHECK(lca_label(parse_prefix("(/ q1 q0)"), 0, 1) == LcaLabel::DivReverse);
}

TEST_CASE("label names round-trip") {
  for (LcaLabel label : {LcaLabel::Plus, LcaLabel::Times, LcaLabel::Minus,
                         LcaLabel::MinusReverse, LcaLabel::Div, LcaLabel::DivReverse}) {
    CHECK(*label_from_name(label_name(label)) == label);
    CHECK(reverse_label(reverse_label(label)) == label);
  }
  CHECK(std::string(label_name(LcaLabel::MinusReverse)) == "MINUS_REVERSE");
  CHECK(reverse_label(LcaLabel::Plus) == LcaLabel::Plus);
  CHECK(reverse_label(LcaLabel::Div) == LcaLabel::DivReverse);
  CHECK(!label_from_name("SOMETHING_ELSE"));
}

TEST_CASE("joining terms can relabel pairs inside them") {
  Expr inner = parse_prefix("(- q1 q2)");
  CHECK(lca_label(inner, 1, 2) == LcaLabel::Minus);
  Expr joined = monotonize(Expr::node(Op::Sub, Expr::leaf(0), inner));
  CHECK(lca_label(joined, 1, 2) == LcaLabel::MinusReverse);
  CHECK(lca_label(joined, 0, 1) == LcaLabel::Minus);
  CHECK(lca_label(joined, 0, 2) == LcaLabel::Plus);
}

TEST_CASE("lca equivalence matches map equality on random trees") {
  std::mt19937 rng(411);
  for (int i = 0; i < 300; ++i) {
    Expr a = monotree::testing::random_valid_tree(rng, 4, 4);
    Expr b = monotree::testing::random_valid_tree(rng, 4, 4);
    CHECK(lca_equivalent(a, b) == (lca_map(a) == lca_map(b)));
    CHECK(lca_equivalent(a, a));
  }
  CHECK_THROWS_AS(lca_equivalent(parse_prefix("(+ q0 q1)"), parse_prefix("(+ q0 q2)")),
                  LeafSetMismatchError);
}

TEST_CASE("library lca map agrees with the reference on random trees") {
  std::mt19937 rng(917);
  for (int i = 0; i < 500; ++i) {
    Expr tree = monotree::testing::random_valid_tree(rng, 5, 8);
    auto ref = monotree::testing::ref_lca_map(tree);
    LcaMap lib = lca_map(tree);
    REQUIRE(ref.size() == lib.size());
    for (const auto& [pair, label] : lib) {
      CHECK(ref.at(pair) == label_name(label));
    }
  }
}

TEST_CASE("monotonize preserves value and leaf set on random trees") {
  std::mt19937 rng(2026);
  for (int i = 0; i < 400; ++i) {
    Expr tree = monotree::testing::random_valid_tree(rng, 2 + i % 5, 9);
    Expr mono = monotonize(tree);
    CHECK(monotree::testing::ref_monotonic(mono));
    CHECK(is_monotonic(mono));
    CHECK(is_valid(mono));
    auto leaves = tree.leaf_indices();
    auto mono_leaves = mono.leaf_indices();
    std::sort(leaves.begin(), leaves.end());
    std::sort(mono_leaves.begin(), mono_leaves.end());
    CHECK(leaves == mono_leaves);
    for (int trial = 0; trial < 5; ++trial) {
      auto values = monotree::testing::random_positive_values(rng, leaves);
      auto before = monotree::testing::ref_eval(tree, values);
      auto after = monotree::testing::ref_eval(mono, values);
      if (before) {
        REQUIRE(after);
        CHECK(*before == *after);
      }
    }
  }
}

TEST_CASE("canonical form is constant across an equivalence family") {
  std::mt19937 rng(7171);
  for (int i = 0; i < 60; ++i) {
    Expr tree = monotonize(monotree::testing::random_valid_tree(rng, 4, 6));
    std::string canon = to_prefix(canonicalize(tree));
    for (const Expr& member : monotree::testing::equivalence_family(tree)) {
      CHECK(is_monotonic(member));
      CHECK(lca_equivalent(member, tree));
      CHECK(to_prefix(canonicalize(member)) == canon);
    }
  }
}

TEST_CASE("infix printing delegates leaf text to the caller") {
  Expr tree = parse_prefix("(* (+ q2 q3) q0)");
  std::map<int, Rational> values{{0, Rational(9)}, {2, Rational(3)}, {3, Rational(5)}};
  auto with_values = [&](int leaf) { return values.at(leaf).to_string(); };
  CHECK(to_infix(tree, with_values) == "(3 + 5) * 9");
  auto names = [](int leaf) { return "q" + std::to_string(leaf); };
  CHECK(to_infix(parse_prefix("(- q0 q1)"), names) == "q0 - q1");
}
