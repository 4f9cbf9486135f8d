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

#include "monotree/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "monotree/schema.hpp"

namespace monotree {

namespace {

double ratio(long long num, long long den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

double Metrics::relevance_relax() const { return ratio(relevance_correct, relevance_total); }
double Metrics::relevance_strict() const { return ratio(relevance_problems_correct, problems); }
double Metrics::lca_relax() const { return ratio(lca_correct, lca_total); }
double Metrics::lca_strict() const { return ratio(lca_problems_correct, problems); }
double Metrics::solve_accuracy() const { return ratio(solved, problems); }

void Metrics::add(const Metrics& other) {
  relevance_correct += other.relevance_correct;
  relevance_total += other.relevance_total;
  relevance_problems_correct += other.relevance_problems_correct;
  lca_correct += other.lca_correct;
  lca_total += other.lca_total;
  lca_problems_correct += other.lca_problems_correct;
  solved += other.solved;
  problems += other.problems;
}

namespace {

void build_examples(const std::vector<Problem>& problems, const FeatureConfig& fc,
                    std::vector<Example>& relevance_out, std::vector<Example>& lca_out) {
  for (const Problem& p : problems) {
    GoldLabels gold = derive_labels(p);
    auto schemas = extract_schemas(p);
    auto question = extract_question(p);
    for (const Quantity& q : p.quantities) {
      relevance_out.push_back(
          Example{relevance_features(p, schemas, question, q.index, fc),
                  gold.relevant.at(q.index) ? kRelevantClass : kIrrelevantClass});
    }
    for (const auto& [key, label] : gold.lca) {
      lca_out.push_back(Example{lca_features(p, schemas, question, key.first, key.second, fc),
                                label_name(label)});
    }
  }
}

void require_gold(const std::vector<Problem>& problems) {
  for (const Problem& p : problems) {
    if (!p.gold_tree) {
      throw std::invalid_argument("problem " + p.id + " has no gold tree; training needs one");
    }
  }
}

}  // namespace

TrainedModels train_models(const std::vector<Problem>& problems,
                           const TrainerConfig& trainer,
                           const InferenceConfig& inference,
                           const FeatureConfig& features, bool tune) {
  require_gold(problems);
  std::vector<Example> relevance_examples;
  std::vector<Example> lca_examples;
  build_examples(problems, features, relevance_examples, lca_examples);

  TrainedModels models;
  models.relevance =
      train(relevance_examples, {kRelevantClass, kIrrelevantClass}, trainer);
  models.lca = train(lca_examples, lca_class_names(), trainer);
  if (tune) {
    models.w_rel = tune_w_rel(
        problems,
        [&](const Problem& p) {
          return std::make_unique<ModelScorer>(p, models.relevance, models.lca, features);
        },
        inference);
  } else {
    models.w_rel = inference.w_rel;
  }
  return models;
}

Metrics evaluate_problems(const std::vector<Problem>& test, const TrainedModels& models,
                          const InferenceConfig& inference, const FeatureConfig& features) {
  require_gold(test);
  InferenceConfig solve_config = inference;
  solve_config.w_rel = models.w_rel;

  Metrics m;
  for (const Problem& p : test) {
    GoldLabels gold = derive_labels(p);
    auto schemas = extract_schemas(p);
    auto question = extract_question(p);

    bool every_quantity_right = true;
    for (const Quantity& q : p.quantities) {
      FeatureVector fv = relevance_features(p, schemas, question, q.index, features);
      bool predicted_relevant = !(score_rel(models.relevance, fv) > 0.0);
      ++m.relevance_total;
      if (predicted_relevant == gold.relevant.at(q.index)) {
        ++m.relevance_correct;
      } else {
        every_quantity_right = false;
      }
    }
    if (every_quantity_right) ++m.relevance_problems_correct;

    bool every_pair_right = true;
    for (const auto& [key, label] : gold.lca) {
      FeatureVector fv = lca_features(p, schemas, question, key.first, key.second, features);
      ++m.lca_total;
      if (models.lca.predict(fv) == label_name(label)) {
        ++m.lca_correct;
      } else {
        every_pair_right = false;
      }
    }
    if (every_pair_right) ++m.lca_problems_correct;

    try {
      ModelScorer scorer(p, models.relevance, models.lca, features);
      Solution s = solve(p, scorer, solve_config);
      if (s.value == p.answer) ++m.solved;
    } catch (const TooFewQuantitiesError&) {
    } catch (const NoEvaluableCandidateError&) {
    }
    ++m.problems;
  }
  return m;
}

EvalReport cross_validate(const std::vector<Problem>& problems,
                          const TrainerConfig& trainer,
                          const InferenceConfig& inference,
                          const FeatureConfig& features, bool tune) {
  require_gold(problems);
  std::set<int> fold_ids;
  for (const Problem& p : problems) fold_ids.insert(p.fold);
  if (fold_ids.size() < 2) {
    throw MissingFoldsError("cross-validation needs at least 2 folds; corpus has " +
                            std::to_string(fold_ids.size()));
  }

  auto run_fold = [&](int fold) {
    std::vector<Problem> train_set;
    std::vector<Problem> test_set;
    for (const Problem& p : problems) {
      (p.fold == fold ? test_set : train_set).push_back(p);
    }
    TrainedModels models = train_models(train_set, trainer, inference, features, tune);
    FoldReport report;
    report.fold = fold;
    report.w_rel = models.w_rel;
    report.metrics = evaluate_problems(test_set, models, inference, features);
    for (const Problem& p : train_set) report.train_ids.push_back(p.id);
    for (const Problem& p : test_set) report.test_ids.push_back(p.id);
    std::sort(report.train_ids.begin(), report.train_ids.end());
    std::sort(report.test_ids.begin(), report.test_ids.end());
    return report;
  };

  std::vector<std::future<FoldReport>> jobs;
  for (int fold : fold_ids) {
    jobs.push_back(std::async(std::launch::async, run_fold, fold));
  }

  EvalReport report;
  report.trainer = trainer;
  report.inference = inference;
  report.features = features;
  for (auto& job : jobs) {
    report.folds.push_back(job.get());
    report.overall.add(report.folds.back().metrics);
  }
  return report;
}

EvalReport ablate(const std::vector<Problem>& problems, const TrainerConfig& trainer,
                  const InferenceConfig& inference, const FeatureConfig& features,
                  const std::string& group, bool tune) {
  FeatureConfig fc = features;
  InferenceConfig ic = inference;
  std::string canonical;
  if (group == "none" || group.empty()) {
    canonical = "none";
  } else if (group == "rel:unit" || group == "unit") {
    fc.drop_unit = true;
    canonical = "rel:unit";
  } else if (group == "rel:np" || group == "np") {
    fc.drop_np = true;
    canonical = "rel:np";
  } else if (group == "rel:misc" || group == "misc") {
    fc.drop_misc = true;
    canonical = "rel:misc";
  } else if (group == "lca:individual" || group == "individual") {
    fc.drop_individual = true;
    canonical = "lca:individual";
  } else if (group == "lca:pair" || group == "pair") {
    fc.drop_pair = true;
    canonical = "lca:pair";
  } else if (group == "lca:question" || group == "question") {
    fc.drop_question = true;
    canonical = "lca:question";
  } else if (group == "constraints:positive" || group == "positive") {
    ic.require_positive = false;
    canonical = "constraints:positive";
  } else if (group == "constraints:integral" || group == "integral") {
    ic.require_integral = false;
    canonical = "constraints:integral";
  } else if (group == "constraints:all" || group == "all") {
    ic.require_positive = false;
    ic.require_integral = false;
    canonical = "constraints:all";
  } else {
    throw UnknownGroupError("unknown ablation group \"" + group + "\"");
  }

  EvalReport report = cross_validate(problems, trainer, ic, fc, tune);
  report.dropped_group = canonical;
  return report;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-5s %-10s %10s %10s %10s %10s %8s\n", "fold",
                "w_rel", "rel-relax", "rel-strict", "lca-relax", "lca-strict", "solve");
  out << line;
  auto row = [&](const std::string& name, const std::string& w, const Metrics& m) {
    std::snprintf(line, sizeof(line), "%-5s %-10s %10.4f %10.4f %10.4f %10.4f %8.4f\n",
                  name.c_str(), w.c_str(), m.relevance_relax(), m.relevance_strict(),
                  m.lca_relax(), m.lca_strict(), m.solve_accuracy());
    out << line;
  };
  char wbuf[32];
  for (const FoldReport& fold : report.folds) {
    std::snprintf(wbuf, sizeof(wbuf), "%g", fold.w_rel);
    row(std::to_string(fold.fold), wbuf, fold.metrics);
  }
  row("all", "-", report.overall);
  if (report.dropped_group != "none") {
    out << "dropped: " << report.dropped_group << "\n";
  }
  return out.str();
}

void write_report_json(const EvalReport& report, const std::string& path) {
  nlohmann::json j;
  j["dropped_group"] = report.dropped_group;
  j["trainer"] = {{"epochs", report.trainer.epochs},
                  {"learning_rate", report.trainer.learning_rate},
                  {"regularization", report.trainer.regularization},
                  {"seed", report.trainer.seed}};
  j["inference"] = {{"beam_width", report.inference.beam_width},
                    {"require_positive", report.inference.require_positive},
                    {"require_integral", report.inference.require_integral}};
  auto metrics_json = [](const Metrics& m) {
    return nlohmann::json{{"relevance_correct", m.relevance_correct},
                          {"relevance_total", m.relevance_total},
                          {"relevance_relax", m.relevance_relax()},
                          {"relevance_strict", m.relevance_strict()},
                          {"lca_correct", m.lca_correct},
                          {"lca_total", m.lca_total},
                          {"lca_relax", m.lca_relax()},
                          {"lca_strict", m.lca_strict()},
                          {"solved", m.solved},
                          {"problems", m.problems},
                          {"solve_accuracy", m.solve_accuracy()}};
  };
  j["overall"] = metrics_json(report.overall);
  j["folds"] = nlohmann::json::array();
  for (const FoldReport& fold : report.folds) {
    j["folds"].push_back({{"fold", fold.fold},
                          {"w_rel", fold.w_rel},
                          {"metrics", metrics_json(fold.metrics)},
                          {"train_ids", fold.train_ids},
                          {"test_ids", fold.test_ids}});
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write report file: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("failed writing report file: " + path);
}

}  // namespace monotree
