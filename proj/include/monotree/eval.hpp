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
// Corpus-level training, cross-validation, and ablation.

#ifndef MONOTREE_EVAL_HPP_
#define MONOTREE_EVAL_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "monotree/corpus.hpp"
#include "monotree/features.hpp"
#include "monotree/infer.hpp"
#include "monotree/learn.hpp"

namespace monotree {

struct MissingFoldsError : std::runtime_error {
  explicit MissingFoldsError(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownGroupError : std::runtime_error {
  explicit UnknownGroupError(const std::string& what) : std::runtime_error(what) {}
};

// Counts pooled over problems. The relaxed accuracies pool individual
// decisions (one per quantity, one per gold pair); the strict ones demand an
// entirely correct problem.
struct Metrics {
  long long relevance_correct = 0;
  long long relevance_total = 0;
  long long relevance_problems_correct = 0;
  long long lca_correct = 0;
  long long lca_total = 0;
  long long lca_problems_correct = 0;
  long long solved = 0;
  long long problems = 0;

  double relevance_relax() const;
  double relevance_strict() const;
  double lca_relax() const;
  double lca_strict() const;
  double solve_accuracy() const;
  void add(const Metrics& other);
};

// The two classifiers plus the tuned objective weight.
struct TrainedModels {
  LinearModel relevance;
  LinearModel lca;
  double w_rel = 1.0;
};

// Trains both classifiers on every problem given (gold trees required) and,
// when tune is set, picks w_rel on the same problems by grid search.
TrainedModels train_models(const std::vector<Problem>& problems,
                           const TrainerConfig& trainer,
                           const InferenceConfig& inference,
                           const FeatureConfig& features, bool tune);

// Classifier and end-to-end accuracy of trained models on held-out problems.
// The models' w_rel overrides the one in the inference config.
Metrics evaluate_problems(const std::vector<Problem>& test, const TrainedModels& models,
                          const InferenceConfig& inference, const FeatureConfig& features);

struct FoldReport {
  int fold = 0;
  double w_rel = 1.0;  // tuned on this fold's training split
  Metrics metrics;
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
};

struct EvalReport {
  Metrics overall;
  std::vector<FoldReport> folds;
  TrainerConfig trainer;
  InferenceConfig inference;
  FeatureConfig features;
  std::string dropped_group = "none";
};

// Leave-one-fold-out cross-validation over the problems' fold ids. Folds are
// evaluated concurrently; the merged report does not depend on scheduling.
// Fewer than two distinct folds raises MissingFoldsError.
EvalReport cross_validate(const std::vector<Problem>& problems,
                          const TrainerConfig& trainer,
                          const InferenceConfig& inference,
                          const FeatureConfig& features, bool tune = true);

// Cross-validation with one group switched off. Group names: "none",
// "rel:unit", "rel:np", "rel:misc", "lca:individual", "lca:pair",
// "lca:question", "constraints:positive", "constraints:integral",
// "constraints:all"; the part after the colon is accepted on its own when
// unambiguous. Anything else raises UnknownGroupError.
EvalReport ablate(const std::vector<Problem>& problems, const TrainerConfig& trainer,
                  const InferenceConfig& inference, const FeatureConfig& features,
                  const std::string& group, bool tune = true);

// Human-readable per-fold table.
std::string format_report(const EvalReport& report);

// Full report as JSON, including the train/test id split of every fold.
void write_report_json(const EvalReport& report, const std::string& path);

}  // namespace monotree

#endif  // MONOTREE_EVAL_HPP_
