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

#include <string>
#include <vector>

#include "doctest.h"
#include "monotree/features.hpp"
#include "support/build_problem.hpp"

using namespace monotree;
using monotree::testing::build_problem;
using monotree::testing::Tok;

namespace {

// "Ann had 5 pens . Ann had 3 cups . How many pens does Ann have ?"
Problem two_possessions() {
  return build_problem(
      {{{"Ann", "NNP", "B-NP", 1, "nsubj"},
        {"had", "VBD", "B-VP", -1, "root", "have"},
        {"5", "CD", "B-NP", 3, "num"},
        {"pens", "NNS", "I-NP", 1, "dobj"},
        {".", ".", "O", 1, "punct"}},
       {{"Ann", "NNP", "B-NP", 1, "nsubj"},
        {"had", "VBD", "B-VP", -1, "root", "have"},
        {"3", "CD", "B-NP", 3, "num"},
        {"cups", "NNS", "I-NP", 1, "dobj"},
        {".", ".", "O", 1, "punct"}},
       {{"How", "WRB", "B-NP", 5, "advmod"},
        {"many", "JJ", "I-NP", 2, "amod"},
        {"pens", "NNS", "I-NP", 5, "dobj"},
        {"does", "VBZ", "B-VP", 5, "aux"},
        {"Ann", "NNP", "B-NP", 5, "nsubj"},
        {"have", "VB", "B-VP", -1, "root", "have"},
        {"?", ".", "O", 5, "punct"}}});
}

bool has(const FeatureVector& fv, const std::string& name) {
  return fv.find(name) != fv.end();
}

int keys_containing(const FeatureVector& fv, const std::string& piece) {
  int n = 0;
  for (const auto& [name, value] : fv) {
    if (name.find(piece) != std::string::npos) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("relevance features separate the asked-about quantity from a distractor") {
  Problem p = two_possessions();
  auto schemas = extract_schemas(p);
  auto question = extract_question(p);

  FeatureVector pens = relevance_features(p, schemas, question, 0);
  CHECK(has(pens, "UNIT_IN_QUESTION"));
  CHECK(has(pens, "NP_IN_QUESTION"));
  CHECK(has(pens, "NUM_MAX_MATCH_QUANTITIES=1"));
  CHECK(has(pens, "NUM_QUANTITIES=2"));
  CHECK(!has(pens, "OTHER_UNIT_BETTER"));
  CHECK(!has(pens, "OTHER_NP_BETTER"));
  CHECK(pens.size() == 4 + 6);

  FeatureVector cups = relevance_features(p, schemas, question, 1);
  CHECK(!has(cups, "UNIT_IN_QUESTION"));
  CHECK(has(cups, "OTHER_UNIT_BETTER"));
  CHECK(has(cups, "NP_IN_QUESTION"));
  CHECK(has(cups, "OTHER_NP_BETTER"));
  CHECK(cups.size() == 5 + 10);

  for (const auto& [name, value] : cups) CHECK(value == 1.0);
}

TEST_CASE("relevance conjunctions use sorted name order") {
  Problem p = two_possessions();
  auto schemas = extract_schemas(p);
  auto question = extract_question(p);
  FeatureVector fv = relevance_features(p, schemas, question, 0);
  CHECK(has(fv, "NP_IN_QUESTION&UNIT_IN_QUESTION"));
  CHECK(!has(fv, "UNIT_IN_QUESTION&NP_IN_QUESTION"));
}

TEST_CASE("without a question the match features collapse to a full tie") {
  Problem p = two_possessions();
  auto schemas = extract_schemas(p);
  FeatureVector fv = relevance_features(p, schemas, std::nullopt, 0);
  CHECK(has(fv, "NUM_MAX_MATCH_QUANTITIES=2"));
  CHECK(has(fv, "NUM_QUANTITIES=2"));
  CHECK(!has(fv, "UNIT_IN_QUESTION"));
  CHECK(!has(fv, "NP_IN_QUESTION"));
  CHECK(fv.size() == 2 + 1);
}

TEST_CASE("the quantity-count feature buckets four and above together") {
  std::vector<std::vector<Tok>> sentences;
  const char* values[] = {"2", "3", "4", "6"};
  for (const char* v : values) {
    sentences.push_back({{"Ann", "NNP", "B-NP", 1, "nsubj"},
                         {"had", "VBD", "B-VP", -1, "root", "have"},
                         {v, "CD", "B-NP", 3, "num"},
                         {"pens", "NNS", "I-NP", 1, "dobj"},
                         {".", ".", "O", 1, "punct"}});
  }
  Problem p4 = build_problem(sentences);
  auto fv4 = relevance_features(p4, extract_schemas(p4), std::nullopt, 0);
  CHECK(has(fv4, "NUM_QUANTITIES=4+"));

  sentences.push_back(sentences.back());
  Problem p5 = build_problem(sentences);
  auto fv5 = relevance_features(p5, extract_schemas(p5), std::nullopt, 0);
  CHECK(has(fv5, "NUM_QUANTITIES=4+"));

  sentences.resize(3);
  Problem p3 = build_problem(sentences);
  auto fv3 = relevance_features(p3, extract_schemas(p3), std::nullopt, 0);
  CHECK(has(fv3, "NUM_QUANTITIES=3"));
}

TEST_CASE("dropping a relevance group removes its conjunctions too") {
  Problem p = two_possessions();
  auto schemas = extract_schemas(p);
  auto question = extract_question(p);

  FeatureConfig no_unit;
  no_unit.drop_unit = true;
  FeatureVector fv = relevance_features(p, schemas, question, 1, no_unit);
  CHECK(keys_containing(fv, "UNIT") == 0);
  CHECK(keys_containing(fv, "NUM_MAX_MATCH") == 0);
  CHECK(fv.size() == 3 + 3);

  FeatureConfig none;
  none.drop_unit = none.drop_np = none.drop_misc = true;
  CHECK(relevance_features(p, schemas, question, 1, none).empty());
}

TEST_CASE("pair features read verbs, values and sameness") {
  Problem p = two_possessions();
  auto schemas = extract_schemas(p);
  auto question = extract_question(p);
  FeatureVector fv = lca_features(p, schemas, question, 0, 1);
  CHECK(has(fv, "VERB_i=have"));
  CHECK(has(fv, "VERB_j=have"));
  CHECK(has(fv, "SAME_VERB"));
  CHECK(!has(fv, "SAME_VERB_MENTION"));
  CHECK(!has(fv, "SAME_UNIT"));
  CHECK(has(fv, "VALUE_I_GREATER"));
  CHECK(!has(fv, "QUESTION_COMPARE"));
  CHECK(!has(fv, "QUESTION_RATE"));
  CHECK(fv.size() == 4 + 6);
}

TEST_CASE("quantities attached to one verb mention share it") {
  Problem p = build_problem({{{"Tom", "NNP", "B-NP", 1, "nsubj"},
                              {"bought", "VBD", "B-VP", -1, "root", "buy"},
                              {"3", "CD", "B-NP", 3, "num"},
                              {"pens", "NNS", "I-NP", 1, "dobj"},
                              {"and", "CC", "O", 1, "cc"},
                              {"4", "CD", "B-NP", 6, "num"},
                              {"cups", "NNS", "I-NP", 1, "conj"},
                              {".", ".", "O", 1, "punct"}}});
  FeatureVector fv = lca_features(p, extract_schemas(p), std::nullopt, 0, 1);
  CHECK(has(fv, "SAME_VERB"));
  CHECK(has(fv, "SAME_VERB_MENTION"));
  CHECK(has(fv, "VERB_i=buy"));
  CHECK(!has(fv, "VALUE_I_GREATER"));
}

TEST_CASE("verbs without a lemma fall back to the surface form") {
  Problem p = build_problem({{{"Tom", "NNP", "B-NP", 1, "nsubj"},
                              {"kept", "VBD", "B-VP", -1, "root"},
                              {"3", "CD", "B-NP", 3, "num"},
                              {"pens", "NNS", "I-NP", 1, "dobj"},
                              {"and", "CC", "O", 1, "cc"},
                              {"4", "CD", "B-NP", 6, "num"},
                              {"cups", "NNS", "I-NP", 1, "conj"},
                              {".", ".", "O", 1, "punct"}}});
  FeatureVector fv = lca_features(p, extract_schemas(p), std::nullopt, 0, 1);
  CHECK(has(fv, "VERB_i=kept"));
}

TEST_CASE("neighbor features respect the window and the sentence boundary") {
  Problem p = build_problem({{{"Sam", "NNP", "B-NP", 1, "nsubj"},
                              {"has", "VBZ", "B-VP", -1, "root", "have"},
                              {"4", "CD", "B-NP", 3, "num"},
                              {"pens", "NNS", "I-NP", 1, "dobj"},
                              {"now", "RB", "B-ADVP", 1, "advmod"},
                              {"and", "CC", "O", 1, "cc"},
                              {"he", "PRP", "B-NP", 7, "nsubj"},
                              {"ran", "VBD", "B-VP", 1, "conj", "run"},
                              {"quickly", "RB", "B-ADVP", 7, "advmod"},
                              {".", ".", "O", 1, "punct"}},
                             {{"He", "PRP", "B-NP", 1, "nsubj"},
                              {"got", "VBD", "B-VP", -1, "root", "get"},
                              {"2", "CD", "B-NP", 3, "num"},
                              {"more", "JJR", "B-ADJP", 1, "dep"},
                              {".", ".", "O", 1, "punct"}}});
  FeatureVector fv = lca_features(p, extract_schemas(p), std::nullopt, 0, 1);
  CHECK(has(fv, "NEIGHBOR_i=now"));
  CHECK(!has(fv, "NEIGHBOR_i=quickly"));
  CHECK(has(fv, "NEIGHBOR_j=more"));
  CHECK(!has(fv, "NEIGHBOR_j=now"));
}

TEST_CASE("rate structure surfaces as individual and pair features") {
  Problem p = build_problem(
      {{{"Each", "DT", "B-NP", 4, "nsubj"},
        {"of", "IN", "B-PP", 0, "prep"},
        {"the", "DT", "B-NP", 3, "det"},
        {"boxes", "NNS", "I-NP", 1, "pobj"},
        {"holds", "VBZ", "B-VP", -1, "root", "hold"},
        {"4", "CD", "B-NP", 6, "num"},
        {"pens", "NNS", "I-NP", 4, "dobj"},
        {".", ".", "O", 4, "punct"}},
       {{"Tom", "NNP", "B-NP", 1, "nsubj"},
        {"has", "VBZ", "B-VP", -1, "root", "have"},
        {"6", "CD", "B-NP", 3, "num"},
        {"boxes", "NNS", "I-NP", 1, "dobj"},
        {".", ".", "O", 1, "punct"}},
       {{"How", "WRB", "B-NP", 5, "advmod"},
        {"many", "JJ", "I-NP", 2, "amod"},
        {"pens", "NNS", "I-NP", 5, "dobj"},
        {"does", "VBZ", "B-VP", 5, "aux"},
        {"Tom", "NNP", "B-NP", 5, "nsubj"},
        {"have", "VB", "B-VP", -1, "root", "have"},
        {"?", ".", "O", 5, "punct"}}});
  auto schemas = extract_schemas(p);
  auto question = extract_question(p);
  FeatureVector fv = lca_features(p, schemas, question, 0, 1);
  CHECK(has(fv, "IS_RATE_i"));
  CHECK(!has(fv, "IS_RATE_j"));
  CHECK(has(fv, "RATE_UNIT_IN_QUESTION_i"));
  CHECK(has(fv, "RATE_COMPONENT_MATCH_b"));
  CHECK(!has(fv, "RATE_COMPONENT_MATCH_a"));
  CHECK(has(fv, "VERB_i=hold"));

  FeatureConfig no_individual;
  no_individual.drop_individual = true;
  FeatureVector pair_only = lca_features(p, schemas, question, 0, 1, no_individual);
  CHECK(keys_containing(pair_only, "VERB_i") == 0);
  CHECK(keys_containing(pair_only, "IS_RATE") == 0);
  CHECK(keys_containing(pair_only, "NEIGHBOR") == 0);
  CHECK(has(pair_only, "RATE_COMPONENT_MATCH_b"));
}

TEST_CASE("question cues fire on comparison and distribution words") {
  Problem compare = build_problem(
      {{{"Ann", "NNP", "B-NP", 1, "nsubj"},
        {"had", "VBD", "B-VP", -1, "root", "have"},
        {"5", "CD", "B-NP", 3, "num"},
        {"pens", "NNS", "I-NP", 1, "dobj"},
        {"and", "CC", "O", 1, "cc"},
        {"3", "CD", "B-NP", 6, "num"},
        {"cups", "NNS", "I-NP", 1, "conj"},
        {".", ".", "O", 1, "punct"}},
       {{"How", "WRB", "B-NP", 5, "advmod"},
        {"many", "JJ", "I-NP", 2, "amod"},
        {"more", "JJR", "I-NP", 3, "amod"},
        {"pens", "NNS", "I-NP", 6, "dobj"},
        {"than", "IN", "B-PP", 3, "prep"},
        {"cups", "NNS", "B-NP", 4, "pobj"},
        {"remain", "VB", "B-VP", -1, "root", "remain"},
        {"?", ".", "O", 6, "punct"}}});
  FeatureVector fv = lca_features(compare, extract_schemas(compare),
                                  extract_question(compare), 0, 1);
  CHECK(has(fv, "QUESTION_COMPARE"));
  CHECK(!has(fv, "QUESTION_RATE"));

  Problem rate = build_problem(
      {{{"Ann", "NNP", "B-NP", 1, "nsubj"},
        {"had", "VBD", "B-VP", -1, "root", "have"},
        {"6", "CD", "B-NP", 3, "num"},
        {"pens", "NNS", "I-NP", 1, "dobj"},
        {"and", "CC", "O", 1, "cc"},
        {"3", "CD", "B-NP", 6, "num"},
        {"friends", "NNS", "I-NP", 1, "conj"},
        {".", ".", "O", 1, "punct"}},
       {{"How", "WRB", "B-NP", 5, "advmod"},
        {"many", "JJ", "I-NP", 2, "amod"},
        {"pens", "NNS", "I-NP", 5, "dobj"},
        {"does", "VBZ", "B-VP", 5, "aux"},
        {"each", "DT", "B-NP", 5, "nsubj"},
        {"get", "VB", "B-VP", -1, "root", "get"},
        {"?", ".", "O", 5, "punct"}}});
  FeatureVector rv = lca_features(rate, extract_schemas(rate),
                                  extract_question(rate), 0, 1);
  CHECK(has(rv, "QUESTION_RATE"));
  CHECK(!has(rv, "QUESTION_COMPARE"));
}

TEST_CASE("pair features demand textual order") {
  Problem p = two_possessions();
  auto schemas = extract_schemas(p);
  auto question = extract_question(p);
  CHECK_THROWS_AS(lca_features(p, schemas, question, 1, 0), OrderViolationError);
  CHECK_THROWS_AS(lca_features(p, schemas, question, 0, 0), OrderViolationError);
}

TEST_CASE("schemas must cover every quantity") {
  Problem p = two_possessions();
  auto question = extract_question(p);
  CHECK_THROWS_AS(relevance_features(p, {}, question, 0), std::invalid_argument);
  CHECK_THROWS_AS(lca_features(p, {}, question, 0, 1), std::invalid_argument);
}

TEST_CASE("formatted features are sorted tab-separated lines") {
  FeatureVector fv{{"B_FLAG", 1.0}, {"A_SCORE", 0.5}};
  CHECK(format_features(fv) == "A_SCORE\t0.5\nB_FLAG\t1\n");
  CHECK(format_features({}).empty());
}
