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

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "monotree/corpus.hpp"

using namespace monotree;

namespace {

// A well-formed two-quantity record; tests below perturb copies of it.
std::string good_record(const std::string& id = "p1") {
  return R"({"id":")" + id + R"(","text":"Al had 8 pins . Al lost 3 pins . How many pins now ?",)"
         R"gt("fold":0,"answer":"5","gold_tree":"(- q0 q1)",)gt"
         R"("tokens":[)"
         R"({"text":"Al","pos":"NNP","head":1,"deprel":"nsubj","chunk":"B-NP","sentence_id":0},)"
         R"({"text":"had","pos":"VBD","head":-1,"deprel":"root","chunk":"B-VP","sentence_id":0,"lemma":"have"},)"
         R"({"text":"8","pos":"CD","head":3,"deprel":"num","chunk":"B-NP","sentence_id":0},)"
         R"({"text":"pins","pos":"NNS","head":1,"deprel":"dobj","chunk":"I-NP","sentence_id":0},)"
         R"({"text":".","pos":".","head":1,"deprel":"punct","chunk":"O","sentence_id":0},)"
         R"({"text":"Al","pos":"NNP","head":6,"deprel":"nsubj","chunk":"B-NP","sentence_id":1},)"
         R"({"text":"lost","pos":"VBD","head":-1,"deprel":"root","chunk":"B-VP","sentence_id":1,"lemma":"lose"},)"
         R"({"text":"3","pos":"CD","head":8,"deprel":"num","chunk":"B-NP","sentence_id":1},)"
         R"({"text":"pins","pos":"NNS","head":6,"deprel":"dobj","chunk":"I-NP","sentence_id":1},)"
         R"({"text":".","pos":".","head":6,"deprel":"punct","chunk":"O","sentence_id":1},)"
         R"({"text":"How","pos":"WRB","head":11,"deprel":"advmod","chunk":"B-NP","sentence_id":2},)"
         R"({"text":"many","pos":"JJ","head":12,"deprel":"amod","chunk":"I-NP","sentence_id":2},)"
         R"({"text":"pins","pos":"NNS","head":13,"deprel":"dep","chunk":"I-NP","sentence_id":2},)"
         R"({"text":"now","pos":"RB","head":-1,"deprel":"root","chunk":"B-ADVP","sentence_id":2},)"
         R"({"text":"?","pos":".","head":13,"deprel":"punct","chunk":"O","sentence_id":2}],)"
         R"("quantities":[{"index":0,"value":"8","token":2},{"index":1,"value":"3","token":7}]})";
}

std::string replaced(std::string record, const std::string& from, const std::string& to) {
  size_t at = record.find(from);
  REQUIRE(at != std::string::npos);
  return record.replace(at, from.size(), to);
}

std::string temp_corpus(const std::vector<std::string>& lines) {
  static int counter = 0;
  std::string path = "corpus_test_" + std::to_string(counter++) + ".jsonl";
  std::ofstream out(path);
  for (const std::string& line : lines) out << line << "\n";
  return path;
}

}  // namespace

TEST_CASE("a well-formed record parses completely") {
  Problem p = parse_problem(good_record());
  CHECK(p.id == "p1");
  CHECK(p.fold == 0);
  CHECK(p.tokens.size() == 15);
  CHECK(p.quantities.size() == 2);
  CHECK(p.quantities[1].value == Rational(3));
  CHECK(p.quantities[1].token_position == 7);
  CHECK(p.answer == Rational(5));
  REQUIRE(p.gold_tree);
  CHECK(to_prefix(*p.gold_tree) == "(- q0 q1)");
  CHECK(p.tokens[1].lemma == "have");
  CHECK(p.tokens[0].lemma.empty());
}

TEST_CASE("serialization round-trips through the parser") {
  Problem p = parse_problem(good_record());
  Problem again = parse_problem(serialize_problem(p));
  CHECK(again.id == p.id);
  CHECK(again.text == p.text);
  CHECK(again.tokens.size() == p.tokens.size());
  for (size_t i = 0; i < p.tokens.size(); ++i) {
    CHECK(again.tokens[i].text == p.tokens[i].text);
    CHECK(again.tokens[i].pos == p.tokens[i].pos);
    CHECK(again.tokens[i].head == p.tokens[i].head);
    CHECK(again.tokens[i].chunk == p.tokens[i].chunk);
    CHECK(again.tokens[i].sentence_id == p.tokens[i].sentence_id);
    CHECK(again.tokens[i].lemma == p.tokens[i].lemma);
  }
  CHECK(again.answer == p.answer);
  CHECK(to_prefix(*again.gold_tree) == to_prefix(*p.gold_tree));
}

TEST_CASE("gold trees are canonicalized on load") {
  std::string shuffled =
      replaced(good_record(), R"("answer":"5")", R"("answer":"11")");
  shuffled = replaced(shuffled, R"gt("gold_tree":"(- q0 q1)")gt", R"gt("gold_tree":"(+ q1 q0)")gt");
  Problem p = parse_problem(shuffled);
  CHECK(to_prefix(*p.gold_tree) == "(+ q0 q1)");
}

TEST_CASE("structural problems raise FormatError") {
  CHECK_THROWS_AS(parse_problem("not json"), FormatError);
  CHECK_THROWS_AS(parse_problem("{}"), FormatError);
  CHECK_THROWS_AS(parse_problem(replaced(good_record(), R"("fold":0)", R"("fold":"zero")")),
                  FormatError);
  // Token text with embedded whitespace.
  CHECK_THROWS_AS(parse_problem(replaced(good_record(), R"("text":"Al",)", R"("text":"A l",)")),
                  FormatError);
  // Head outside the sentence.
  CHECK_THROWS_AS(
      parse_problem(replaced(good_record(), R"("text":"8","pos":"CD","head":3)",
                             R"("text":"8","pos":"CD","head":9)")),
      FormatError);
  // Self-loop head.
  CHECK_THROWS_AS(
      parse_problem(replaced(good_record(), R"("text":"8","pos":"CD","head":3)",
                             R"("text":"8","pos":"CD","head":2)")),
      FormatError);
  // Quantity pointing at a non-numeric token.
  CHECK_THROWS_AS(
      parse_problem(replaced(good_record(), R"({"index":0,"value":"8","token":2})",
                             R"({"index":0,"value":"8","token":3})")),
      FormatError);
  // Quantities out of order.
  CHECK_THROWS_AS(
      parse_problem(replaced(
          good_record(),
          R"("quantities":[{"index":0,"value":"8","token":2},{"index":1,"value":"3","token":7}])",
          R"("quantities":[{"index":0,"value":"3","token":7},{"index":1,"value":"8","token":2}])")),
      FormatError);
  // Index not matching the position in the array.
  CHECK_THROWS_AS(
      parse_problem(replaced(good_record(), R"({"index":1,"value":"3","token":7})",
                             R"({"index":2,"value":"3","token":7})")),
      FormatError);
  // Decreasing sentence ids.
  std::string regressed = replaced(
      good_record(),
      R"({"text":"now","pos":"RB","head":-1,"deprel":"root","chunk":"B-ADVP","sentence_id":2},)"
      R"({"text":"?","pos":".","head":13,"deprel":"punct","chunk":"O","sentence_id":2}])",
      R"({"text":"now","pos":"RB","head":-1,"deprel":"root","chunk":"B-ADVP","sentence_id":1},)"
      R"({"text":"?","pos":".","head":13,"deprel":"punct","chunk":"O","sentence_id":1}])");
  CHECK_THROWS_AS(parse_problem(regressed), FormatError);
}

TEST_CASE("gold errors are typed") {
  CHECK_THROWS_AS(
      parse_problem(replaced(good_record(), R"gt("gold_tree":"(- q0 q1)")gt",
                             R"gt("gold_tree":"(- q0 q2)")gt")),
      InvalidGoldError);
  CHECK_THROWS_AS(
      parse_problem(replaced(good_record(), R"gt("gold_tree":"(- q0 q1)")gt",
                             R"gt("gold_tree":"(+ q0 q0)")gt")),
      InvalidGoldError);
  CHECK_THROWS_AS(
      parse_problem(replaced(good_record(), R"("answer":"5")", R"("answer":"6")")),
      GoldMismatchError);
}

TEST_CASE("derive_labels reads relevance and pair labels off the gold tree") {
  std::string record = good_record();
  Problem p = parse_problem(record);
  GoldLabels labels = derive_labels(p);
  CHECK(labels.relevant.at(0));
  CHECK(labels.relevant.at(1));
  CHECK(labels.lca.at({0, 1}) == LcaLabel::Minus);

  Problem no_gold = parse_problem(replaced(record, R"gt("gold_tree":"(- q0 q1)",)gt", ""));
  CHECK(!no_gold.gold_tree);
  CHECK_THROWS(derive_labels(no_gold));
}

TEST_CASE("strict loading aborts with the line number") {
  std::string path = temp_corpus({good_record("a"), "broken", good_record("c")});
  CHECK_THROWS_WITH_AS(static_cast<void>(load_corpus(path, true)),
                       doctest::Contains(":2:"), FormatError);
  std::remove(path.c_str());
}

TEST_CASE("lenient loading collects issues and keeps the rest") {
  std::vector<std::string> lines;
  for (int i = 0; i < 10; ++i) {
    lines.push_back(i == 4 ? replaced(good_record("bad"), R"("answer":"5")", R"("answer":"7")")
                           : good_record("ok" + std::to_string(i)));
  }
  std::string path = temp_corpus(lines);
  LoadResult result = load_corpus(path, false);
  CHECK(result.problems.size() == 9);
  REQUIRE(result.issues.size() == 1);
  CHECK(result.issues[0].line == 5);
  std::remove(path.c_str());
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(static_cast<void>(load_corpus("no_such_dir/none.jsonl")), IoError);
}

TEST_CASE("numeric token detection covers hyphenated mentions") {
  CHECK(numeric_token("8"));
  CHECK(numeric_token("28"));
  CHECK(numeric_token("4-dollar"));
  CHECK(numeric_token("3.5"));
  CHECK(!numeric_token("pins"));
  CHECK(!numeric_token("-"));
  CHECK(!numeric_token("q4"));
}

TEST_CASE("the bundled corpora load strictly") {
  LoadResult mini = load_corpus(std::string(MONOTREE_DATA_DIR) + "/mini_corpus.jsonl");
  CHECK(mini.problems.size() == 54);
  CHECK(mini.issues.empty());
  for (const Problem& p : mini.problems) {
    REQUIRE(p.gold_tree);
    CHECK(is_monotonic(*p.gold_tree));
    CHECK(*try_evaluate(*p.gold_tree, p.quantity_values()) == p.answer);
  }
  LoadResult constraints = load_corpus(std::string(MONOTREE_DATA_DIR) + "/constraint_corpus.jsonl");
  CHECK(constraints.problems.size() == 20);
}
