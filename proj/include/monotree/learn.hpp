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
// One-vs-all linear classifiers trained with L2-regularized hinge-loss SGD.
// Training is deterministic for a fixed seed.

#ifndef MONOTREE_LEARN_HPP_
#define MONOTREE_LEARN_HPP_

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "monotree/expr.hpp"
#include "monotree/features.hpp"

namespace monotree {

struct EmptyClassError : std::runtime_error {
  explicit EmptyClassError(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownLabelError : std::runtime_error {
  explicit UnknownLabelError(const std::string& what) : std::runtime_error(what) {}
};
struct VersionMismatchError : std::runtime_error {
  explicit VersionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct TrainerConfig {
  int epochs = 50;
  double learning_rate = 0.1;  // decays as 1/t across update steps
  double regularization = 1e-4;
  unsigned seed = 13;
};

struct Example {
  FeatureVector features;
  std::string label;
};

// A weight vector and bias per class. Margins are raw; no calibration.
class LinearModel {
 public:
  LinearModel() = default;
  LinearModel(std::vector<std::string> classes, TrainerConfig config);

  const std::vector<std::string>& classes() const { return classes_; }
  const TrainerConfig& config() const { return config_; }

  double margin(size_t class_index, const FeatureVector& fv) const;
  double margin(const std::string& class_name, const FeatureVector& fv) const;
  // Highest-margin class; ties resolve to the earlier class in declared order.
  const std::string& predict(const FeatureVector& fv) const;
  // Softmax over the class margins; sums to 1.
  std::vector<double> normalized_scores(const FeatureVector& fv) const;

  size_t class_index(const std::string& name) const;  // UnknownLabelError

  bool operator==(const LinearModel& o) const;

 private:
  std::vector<std::string> classes_;
  std::vector<std::unordered_map<std::string, double>> weights_;
  std::vector<double> bias_;
  TrainerConfig config_;

  friend LinearModel train(const std::vector<Example>&, const std::vector<std::string>&,
                           const TrainerConfig&);
  friend void save_model(const LinearModel&, const std::string&);
  friend LinearModel load_model(const std::string&);
};

// Trains one binary hinge-loss problem per class. Every class must occur in
// the data (EmptyClassError) and every example label must be a declared class
// (UnknownLabelError).
LinearModel train(const std::vector<Example>& examples,
                  const std::vector<std::string>& classes,
                  const TrainerConfig& config = {});

// Relevance convention: the margin of IRRELEVANT minus the margin of
// RELEVANT, so positive scores favor leaving the quantity out.
extern const char* const kIrrelevantClass;
extern const char* const kRelevantClass;
double score_rel(const LinearModel& relevance_model, const FeatureVector& fv);

// Margin of the class named after the label.
double score_pair(const LinearModel& lca_model, const FeatureVector& fv, LcaLabel op);

// The six LCA class names in canonical order.
std::vector<std::string> lca_class_names();

// Versioned text format: a "monotree-model v1" header, then one
// class/feature/weight line per entry. Loading a file with any other header
// raises VersionMismatchError. Save then load is lossless.
void save_model(const LinearModel& model, const std::string& path);
LinearModel load_model(const std::string& path);

}  // namespace monotree

#endif  // MONOTREE_LEARN_HPP_
