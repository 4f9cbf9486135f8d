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

#include "monotree/learn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace monotree {

const char* const kIrrelevantClass = "IRRELEVANT";
const char* const kRelevantClass = "RELEVANT";

namespace {
const char kModelHeader[] = "monotree-model v1";
const char kBiasFeature[] = "__bias__";
}  // namespace

LinearModel::LinearModel(std::vector<std::string> classes, TrainerConfig config)
    : classes_(std::move(classes)),
      weights_(classes_.size()),
      bias_(classes_.size(), 0.0),
      config_(config) {}

size_t LinearModel::class_index(const std::string& name) const {
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] == name) return i;
  }
  throw UnknownLabelError("model has no class \"" + name + "\"");
}

double LinearModel::margin(size_t class_index, const FeatureVector& fv) const {
  const auto& w = weights_.at(class_index);
  double sum = bias_.at(class_index);
  for (const auto& [name, value] : fv) {
    auto it = w.find(name);
    if (it != w.end()) sum += it->second * value;
  }
  return sum;
}

double LinearModel::margin(const std::string& class_name, const FeatureVector& fv) const {
  return margin(class_index(class_name), fv);
}

const std::string& LinearModel::predict(const FeatureVector& fv) const {
  if (classes_.empty()) throw std::logic_error("predict on an empty model");
  size_t best = 0;
  double best_margin = margin(size_t{0}, fv);
  for (size_t i = 1; i < classes_.size(); ++i) {
    double m = margin(i, fv);
    if (m > best_margin) {
      best = i;
      best_margin = m;
    }
  }
  return classes_[best];
}

std::vector<double> LinearModel::normalized_scores(const FeatureVector& fv) const {
  std::vector<double> margins;
  margins.reserve(classes_.size());
  for (size_t i = 0; i < classes_.size(); ++i) margins.push_back(margin(i, fv));
  double peak = *std::max_element(margins.begin(), margins.end());
  double total = 0.0;
  for (double& m : margins) {
    m = std::exp(m - peak);
    total += m;
  }
  for (double& m : margins) m /= total;
  return margins;
}

bool LinearModel::operator==(const LinearModel& o) const {
  if (classes_ != o.classes_ || bias_ != o.bias_) return false;
  auto sorted = [](const std::unordered_map<std::string, double>& w) {
    return std::map<std::string, double>(w.begin(), w.end());
  };
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (sorted(weights_[i]) != sorted(o.weights_[i])) return false;
  }
  return true;
}

LinearModel train(const std::vector<Example>& examples,
                  const std::vector<std::string>& classes,
                  const TrainerConfig& config) {
  if (classes.empty()) throw std::invalid_argument("train: no classes");
  std::map<std::string, int> counts;
  for (const std::string& c : classes) counts[c] = 0;
  for (const Example& e : examples) {
    auto it = counts.find(e.label);
    if (it == counts.end()) {
      throw UnknownLabelError("example labeled \"" + e.label + "\" is not a declared class");
    }
    ++it->second;
  }
  for (const auto& [name, count] : counts) {
    if (count == 0) throw EmptyClassError("no training examples for class \"" + name + "\"");
  }

  LinearModel model(classes, config);
  std::vector<size_t> order(examples.size());
  std::iota(order.begin(), order.end(), size_t{0});

  for (size_t c = 0; c < classes.size(); ++c) {
    auto& w = model.weights_[c];
    double& bias = model.bias_[c];
    std::mt19937 rng(config.seed);
    long long step = 0;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      for (size_t idx : order) {
        const Example& e = examples[idx];
        ++step;
        double lr = config.learning_rate /
                    (1.0 + config.learning_rate * config.regularization * step);
        double shrink = 1.0 - lr * config.regularization;
        for (auto& [name, weight] : w) weight *= shrink;
        double y = e.label == classes[c] ? 1.0 : -1.0;
        if (y * model.margin(c, e.features) < 1.0) {
          for (const auto& [name, value] : e.features) w[name] += lr * y * value;
          bias += lr * y;
        }
      }
    }
  }
  return model;
}

double score_rel(const LinearModel& relevance_model, const FeatureVector& fv) {
  return relevance_model.margin(kIrrelevantClass, fv) -
         relevance_model.margin(kRelevantClass, fv);
}

double score_pair(const LinearModel& lca_model, const FeatureVector& fv, LcaLabel op) {
  return lca_model.margin(label_name(op), fv);
}

std::vector<std::string> lca_class_names() {
  return {label_name(LcaLabel::Plus),        label_name(LcaLabel::Times),
          label_name(LcaLabel::Minus),       label_name(LcaLabel::MinusReverse),
          label_name(LcaLabel::Div),         label_name(LcaLabel::DivReverse)};
}

void save_model(const LinearModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write model file: " + path);
  char buf[340];
  out << kModelHeader << "\n";
  const TrainerConfig& c = model.config_;
  std::snprintf(buf, sizeof(buf), "#trainer epochs=%d learning_rate=%.17g regularization=%.17g seed=%u\n",
                c.epochs, c.learning_rate, c.regularization, c.seed);
  out << buf;
  for (size_t i = 0; i < model.classes_.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", model.bias_[i]);
    out << model.classes_[i] << '\t' << kBiasFeature << '\t' << buf << "\n";
    std::map<std::string, double> sorted(model.weights_[i].begin(), model.weights_[i].end());
    for (const auto& [name, weight] : sorted) {
      std::snprintf(buf, sizeof(buf), "%.17g", weight);
      out << model.classes_[i] << '\t' << name << '\t' << buf << "\n";
    }
  }
  if (!out) throw IoError("failed writing model file: " + path);
}

LinearModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kModelHeader) {
    throw VersionMismatchError("unsupported model header in " + path + ": \"" + line + "\"");
  }
  LinearModel model;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream cfg(line.substr(1));
      std::string word;
      cfg >> word;  // "trainer"
      while (cfg >> word) {
        size_t eq = word.find('=');
        if (eq == std::string::npos) continue;
        std::string key = word.substr(0, eq);
        std::string value = word.substr(eq + 1);
        if (key == "epochs") model.config_.epochs = std::stoi(value);
        if (key == "learning_rate") model.config_.learning_rate = std::stod(value);
        if (key == "regularization") model.config_.regularization = std::stod(value);
        if (key == "seed") model.config_.seed = static_cast<unsigned>(std::stoul(value));
      }
      continue;
    }
    size_t tab1 = line.find('\t');
    size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw FormatError(path + ":" + std::to_string(line_no) + ": expected class\\tfeature\\tweight");
    }
    std::string cls = line.substr(0, tab1);
    std::string feature = line.substr(tab1 + 1, tab2 - tab1 - 1);
    double weight = std::stod(line.substr(tab2 + 1));
    size_t idx;
    auto found = std::find(model.classes_.begin(), model.classes_.end(), cls);
    if (found == model.classes_.end()) {
      model.classes_.push_back(cls);
      model.weights_.emplace_back();
      model.bias_.push_back(0.0);
      idx = model.classes_.size() - 1;
    } else {
      idx = static_cast<size_t>(found - model.classes_.begin());
    }
    if (feature == kBiasFeature) {
      model.bias_[idx] = weight;
    } else {
      model.weights_[idx][feature] = weight;
    }
  }
  return model;
}

}  // namespace monotree
