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
//
// Sparse named feature vectors for the two classifiers: per-quantity
// relevance and per-pair LCA operation.

#ifndef MONOTREE_FEATURES_HPP_
#define MONOTREE_FEATURES_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotree/corpus.hpp"
#include "monotree/schema.hpp"

namespace monotree {

struct OrderViolationError : std::runtime_error {
  explicit OrderViolationError(const std::string& what) : std::runtime_error(what) {}
};

using FeatureVector = std::map<std::string, double>;

// Feature groups that can be suppressed for ablation runs. Conjunctions are
// formed after suppression, so dropping a group removes its conjunctions too.
struct FeatureConfig {
  // relevance classifier groups
  bool drop_unit = false;
  bool drop_np = false;
  bool drop_misc = false;
  // LCA classifier groups
  bool drop_individual = false;
  bool drop_pair = false;
  bool drop_question = false;
};

// Features scoring how plausibly the quantity is irrelevant: unit and
// related-NP matches against the question, how other quantities compare, and
// the bucketed quantity count. All base features are 0/1 indicators and every
// unordered pair of emitted indicators is added as a conjunction "f&g" (names
// sorted, value min).
FeatureVector relevance_features(const Problem& p,
                                 const std::vector<QuantitySchema>& schemas,
                                 const std::optional<QuestionSpan>& question,
                                 int quantity_index,
                                 const FeatureConfig& config = {});

// Features for the operation between quantities qi and qj, which must appear
// in that order in the text: per-quantity verb/rate/neighborhood evidence,
// pair agreement features, and question cues, plus pairwise conjunctions.
FeatureVector lca_features(const Problem& p,
                           const std::vector<QuantitySchema>& schemas,
                           const std::optional<QuestionSpan>& question,
                           int qi, int qj,
                           const FeatureConfig& config = {});

// Sorted "name\tvalue" lines, one per feature, for diffing in tests.
std::string format_features(const FeatureVector& fv);

}  // namespace monotree

#endif  // MONOTREE_FEATURES_HPP_
