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
// Beam-search construction of a monotone expression tree over a problem's
// quantities, guided by a relevance score per quantity and an operation
// score per quantity pair.

#ifndef MONOTREE_INFER_HPP_
#define MONOTREE_INFER_HPP_

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotree/corpus.hpp"
#include "monotree/expr.hpp"
#include "monotree/features.hpp"
#include "monotree/learn.hpp"
#include "monotree/schema.hpp"

namespace monotree {

struct TooFewQuantitiesError : std::runtime_error {
  explicit TooFewQuantitiesError(const std::string& what) : std::runtime_error(what) {}
};
struct NoEvaluableCandidateError : std::runtime_error {
  explicit NoEvaluableCandidateError(const std::string& what) : std::runtime_error(what) {}
};

// Scoring interface consumed by the beam search. rel(q) is the reward for
// leaving quantity q out of the tree; pair(qi, qj, label) is the reward for
// the pair taking that LCA label, with qi < qj and the label oriented the
// way lca_map orients it.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual double rel(int quantity_index) const = 0;
  virtual double pair(int qi, int qj, LcaLabel label) const = 0;
};

// Scores from a trained relevance model and a trained pair model. All
// feature extraction happens once, in the constructor.
class ModelScorer : public Scorer {
 public:
  ModelScorer(const Problem& problem, const LinearModel& relevance_model,
              const LinearModel& lca_model, const FeatureConfig& features = {});

  double rel(int quantity_index) const override;
  double pair(int qi, int qj, LcaLabel label) const override;

 private:
  std::vector<double> rel_scores_;
  std::map<std::pair<int, int>, std::array<double, 6>> pair_scores_;
};

// Scores straight from gold labels: +1 for leaving out a gold-irrelevant
// quantity, -1 for leaving out a gold-relevant one, 1 for a pair carrying
// its gold label and 0 otherwise. With a wide enough beam the gold tree is
// the unique argmax.
class OracleScorer : public Scorer {
 public:
  OracleScorer(const GoldLabels& gold, int quantity_count);

  double rel(int quantity_index) const override;
  double pair(int qi, int qj, LcaLabel label) const override;

 private:
  std::vector<double> rel_scores_;
  LcaMap gold_;
};

struct InferenceConfig {
  int beam_width = 200;
  double w_rel = 1.0;  // weight of the relevance part of the objective
  bool require_positive = true;
  bool require_integral = true;
  std::vector<double> w_rel_grid = {1e-6, 1e-4, 1e-2, 1.0, 1e2, 1e4, 1e6};
};

// w_rel times the summed rel scores of the quantities the tree leaves out,
// plus the pair score of every quantity pair under the tree's labeling.
double score_expression(const Expr& tree, const Scorer& scorer, double w_rel,
                        int quantity_count);

// Positivity rejects negative values. Integrality rejects fractional values,
// but only when the problem asks "how many".
bool satisfies_constraints(const Rational& value, const InferenceConfig& config,
                           WhKind wh_kind);

// Same checks after evaluating the tree against the problem's quantities; a
// tree that divides by zero never satisfies.
bool satisfies_constraints(const Expr& tree, const Problem& problem,
                           const InferenceConfig& config);

struct Candidate {
  Expr tree;
  Rational value;
  double score;
};

// All complete trees surviving the beam, best first. Ties break on the
// serialized tree so results are reproducible. Candidates that would divide
// by zero are discarded as they arise.
std::vector<Candidate> beam_search(const Problem& problem, const Scorer& scorer,
                                   const InferenceConfig& config);

struct Solution {
  Expr tree;
  Rational value;
  double score;
  bool constrained;  // true when the tree passed the enabled constraints
};

// Best constraint-satisfying candidate, else the best candidate overall.
// Problems with fewer than two quantities raise TooFewQuantitiesError; an
// empty beam raises NoEvaluableCandidateError.
Solution solve(const Problem& problem, const Scorer& scorer,
               const InferenceConfig& config);

// Picks the grid value maximizing the number of problems solved exactly,
// preferring smaller values on ties. Scorers are built once per problem and
// reused across the grid.
double tune_w_rel(const std::vector<Problem>& problems,
                  const std::function<std::unique_ptr<Scorer>(const Problem&)>& make_scorer,
                  const InferenceConfig& config);

}  // namespace monotree

#endif  // MONOTREE_INFER_HPP_
