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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monotree/eval.hpp"
#include "monotree/infer.hpp"
#include "monotree/schema.hpp"

namespace {

using namespace monotree;

struct Options {
  std::string corpus;
  bool lenient = false;
  int beam = 200;
  std::string constraints = "positive,integral";
  std::string w_rel = "tune";
  unsigned seed = 13;
  int epochs = 50;
  double learning_rate = 0.1;
  double regularization = 1e-4;
  std::string drop = "none";
  std::string out_dir;
  std::string report_path;
  std::string models_dir;
  std::string id;
  bool oracle = false;
  bool explain = false;
};

void add_corpus_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--corpus", o.corpus, "JSONL corpus file")->required();
  cmd->add_flag("--lenient", o.lenient, "skip malformed records instead of aborting");
}

void add_inference_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--beam", o.beam, "beam width")->capture_default_str();
  cmd->add_option("--constraints", o.constraints,
                  "comma-separated subset of positive,integral; or none")
      ->capture_default_str();
  cmd->add_option("--w-rel", o.w_rel, "relevance weight, a number or \"tune\"")
      ->capture_default_str();
}

void add_trainer_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "shuffle seed")->capture_default_str();
  cmd->add_option("--epochs", o.epochs, "training epochs")->capture_default_str();
  cmd->add_option("--learning-rate", o.learning_rate, "initial learning rate")
      ->capture_default_str();
  cmd->add_option("--regularization", o.regularization, "L2 strength")
      ->capture_default_str();
}

std::vector<Problem> load_problems(const Options& o) {
  LoadResult result = load_corpus(o.corpus, !o.lenient);
  for (const LoadIssue& issue : result.issues) {
    std::cerr << o.corpus << ":" << issue.line << ": skipped: " << issue.message << "\n";
  }
  if (result.problems.empty()) {
    throw std::runtime_error("corpus " + o.corpus + " holds no usable problems");
  }
  return result.problems;
}

InferenceConfig make_inference(const Options& o, bool& tune) {
  InferenceConfig config;
  config.beam_width = o.beam;
  config.require_positive = false;
  config.require_integral = false;
  if (o.constraints != "none" && !o.constraints.empty()) {
    std::stringstream parts(o.constraints);
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (part == "positive") {
        config.require_positive = true;
      } else if (part == "integral") {
        config.require_integral = true;
      } else {
        throw std::runtime_error("unknown constraint \"" + part +
                                 "\"; expected positive, integral or none");
      }
    }
  }
  if (o.w_rel == "tune") {
    tune = true;
  } else {
    tune = false;
    size_t used = 0;
    config.w_rel = std::stod(o.w_rel, &used);
    if (used != o.w_rel.size()) {
      throw std::runtime_error("--w-rel needs a number or \"tune\", got \"" + o.w_rel + "\"");
    }
  }
  return config;
}

TrainerConfig make_trainer(const Options& o) {
  TrainerConfig config;
  config.epochs = o.epochs;
  config.learning_rate = o.learning_rate;
  config.regularization = o.regularization;
  config.seed = o.seed;
  return config;
}

void emit_report(const EvalReport& report, const Options& o) {
  std::cout << format_report(report);
  if (!o.report_path.empty()) {
    write_report_json(report, o.report_path);
    std::cout << "report written to " << o.report_path << "\n";
  }
}

int run_train(const Options& o) {
  std::vector<Problem> problems = load_problems(o);
  bool tune = true;
  InferenceConfig inference = make_inference(o, tune);
  TrainedModels models =
      train_models(problems, make_trainer(o), inference, FeatureConfig{}, tune);

  std::filesystem::create_directories(o.out_dir);
  save_model(models.relevance, o.out_dir + "/relevance.model");
  save_model(models.lca, o.out_dir + "/lca.model");
  nlohmann::json meta{{"w_rel", models.w_rel}};
  std::ofstream meta_out(o.out_dir + "/meta.json");
  if (!meta_out) throw IoError("cannot write " + o.out_dir + "/meta.json");
  meta_out << meta.dump(2) << "\n";

  std::cout << "trained on " << problems.size() << " problems; w_rel=" << models.w_rel
            << "; models in " << o.out_dir << "\n";
  return 0;
}

int run_cv(const Options& o) {
  std::vector<Problem> problems = load_problems(o);
  bool tune = true;
  InferenceConfig inference = make_inference(o, tune);
  EvalReport report =
      cross_validate(problems, make_trainer(o), inference, FeatureConfig{}, tune);
  emit_report(report, o);
  return 0;
}

int run_ablate(const Options& o) {
  std::vector<Problem> problems = load_problems(o);
  bool tune = true;
  InferenceConfig inference = make_inference(o, tune);
  EvalReport report =
      ablate(problems, make_trainer(o), inference, FeatureConfig{}, o.drop, tune);
  emit_report(report, o);
  return 0;
}

void print_explanation(const Problem& p, const Scorer& scorer) {
  std::cout << "  rel scores:\n";
  for (const Quantity& q : p.quantities) {
    std::printf("    q%d=%s rel=%+.4f\n", q.index, q.value.to_string().c_str(),
                scorer.rel(q.index));
  }
  if (p.quantities.size() > 1) std::cout << "  pair scores:\n";
  for (size_t i = 0; i < p.quantities.size(); ++i) {
    for (size_t j = i + 1; j < p.quantities.size(); ++j) {
      std::printf("    (q%zu,q%zu)", i, j);
      for (LcaLabel label : {LcaLabel::Plus, LcaLabel::Times, LcaLabel::Minus,
                             LcaLabel::MinusReverse, LcaLabel::Div, LcaLabel::DivReverse}) {
        std::printf(" %s=%+.4f", label_name(label),
                    scorer.pair(static_cast<int>(i), static_cast<int>(j), label));
      }
      std::printf("\n");
    }
  }
}

int run_solve(const Options& o) {
  if (o.oracle == !o.models_dir.empty()) {
    throw std::runtime_error("solve needs exactly one of --models <dir> or --oracle");
  }
  std::vector<Problem> problems = load_problems(o);
  if (!o.id.empty()) {
    std::vector<Problem> picked;
    for (const Problem& p : problems) {
      if (p.id == o.id) picked.push_back(p);
    }
    if (picked.empty()) {
      throw std::runtime_error("no problem with id \"" + o.id + "\" in " + o.corpus);
    }
    problems = picked;
  }

  bool tune = true;
  InferenceConfig inference = make_inference(o, tune);

  std::unique_ptr<LinearModel> relevance;
  std::unique_ptr<LinearModel> lca;
  if (!o.oracle) {
    relevance = std::make_unique<LinearModel>(load_model(o.models_dir + "/relevance.model"));
    lca = std::make_unique<LinearModel>(load_model(o.models_dir + "/lca.model"));
    if (tune) {
      std::ifstream meta_in(o.models_dir + "/meta.json");
      if (meta_in) {
        nlohmann::json meta = nlohmann::json::parse(meta_in);
        if (meta.contains("w_rel")) inference.w_rel = meta["w_rel"].get<double>();
      }
    }
  }

  int solved = 0;
  int failed = 0;
  for (const Problem& p : problems) {
    std::unique_ptr<Scorer> scorer;
    try {
      if (o.oracle) {
        scorer = std::make_unique<OracleScorer>(derive_labels(p),
                                                static_cast<int>(p.quantities.size()));
      } else {
        scorer = std::make_unique<ModelScorer>(p, *relevance, *lca, FeatureConfig{});
      }
      Solution s = solve(p, *scorer, inference);
      auto leaf_text = [&](int q) { return p.quantities.at(q).value.to_string(); };
      bool match = s.value == p.answer;
      std::cout << p.id << ": " << to_prefix(s.tree) << "\n";
      std::cout << "  = " << to_infix(s.tree, leaf_text) << " = " << s.value.to_string()
                << (s.constrained ? "" : " (unconstrained fallback)")
                << (match ? "" : " [expected " + p.answer.to_string() + "]") << "\n";
      if (match) ++solved;
      if (o.explain) print_explanation(p, *scorer);
    } catch (const TooFewQuantitiesError& e) {
      std::cerr << p.id << ": error: " << e.what() << "\n";
      ++failed;
    } catch (const NoEvaluableCandidateError& e) {
      std::cerr << p.id << ": error: " << e.what() << "\n";
      ++failed;
    }
  }
  if (problems.size() > 1) {
    std::cout << "solved " << solved << "/" << problems.size() << "\n";
  }
  return failed == 0 ? 0 : 1;
}

std::string span_text(const Problem& p, const TokenSpan& span) {
  std::string out;
  for (int t = span.begin; t < span.end; ++t) {
    if (!out.empty()) out += ' ';
    out += p.tokens[t].text;
  }
  return out;
}

int run_schema_dump(const Options& o) {
  std::vector<Problem> problems = load_problems(o);
  for (const Problem& p : problems) {
    if (!o.id.empty() && p.id != o.id) continue;
    std::cout << "problem " << p.id << "\n";
    auto schemas = extract_schemas(p);
    for (const QuantitySchema& s : schemas) {
      const Quantity& q = p.quantities[s.quantity_index];
      std::cout << "  q" << q.index << " value=" << q.value.to_string();
      std::cout << " verb=" << (s.verb ? p.tokens[*s.verb].text : std::string("-"));
      std::cout << " subject=" << (s.subject ? span_text(p, *s.subject) : std::string("-"));
      std::cout << " units=[";
      for (size_t i = 0; i < s.unit_tokens.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << p.tokens[s.unit_tokens[i]].text;
      }
      std::cout << "]";
      if (s.rate) {
        std::cout << " rate=" << span_text(p, s.rate->unit_a) << "/"
                  << span_text(p, s.rate->unit_b);
      }
      std::cout << " nps=[";
      for (size_t i = 0; i < s.related_nps.size(); ++i) {
        if (i) std::cout << "; ";
        std::cout << span_text(p, s.related_nps[i]);
      }
      std::cout << "]\n";
    }
    if (auto question = extract_question(p)) {
      const char* kind = question->wh_kind == WhKind::HowMany   ? "HowMany"
                         : question->wh_kind == WhKind::HowMuch ? "HowMuch"
                                                                : "Other";
      std::cout << "  question: \"" << span_text(p, question->span) << "\" wh=" << kind
                << "\n";
    } else {
      std::cout << "  question: none\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monotone expression tree solver for arithmetic word problems"};
  app.require_subcommand(1);
  Options o;

  CLI::App* train_cmd = app.add_subcommand("train", "train classifiers on a corpus");
  add_corpus_flags(train_cmd, o);
  add_inference_flags(train_cmd, o);
  add_trainer_flags(train_cmd, o);
  train_cmd->add_option("--out", o.out_dir, "directory for the trained models")->required();

  CLI::App* cv_cmd = app.add_subcommand("cv", "cross-validate over the corpus folds");
  add_corpus_flags(cv_cmd, o);
  add_inference_flags(cv_cmd, o);
  add_trainer_flags(cv_cmd, o);
  cv_cmd->add_option("--report", o.report_path, "write the report as JSON here");

  CLI::App* ablate_cmd = app.add_subcommand("ablate", "cross-validate with a group dropped");
  add_corpus_flags(ablate_cmd, o);
  add_inference_flags(ablate_cmd, o);
  add_trainer_flags(ablate_cmd, o);
  ablate_cmd->add_option("--drop", o.drop, "feature or constraint group to drop")
      ->capture_default_str();
  ablate_cmd->add_option("--report", o.report_path, "write the report as JSON here");

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve problems and print the trees");
  add_corpus_flags(solve_cmd, o);
  add_inference_flags(solve_cmd, o);
  solve_cmd->add_option("--models", o.models_dir, "directory holding trained models");
  solve_cmd->add_flag("--oracle", o.oracle, "score with the gold labels instead of models");
  solve_cmd->add_option("--id", o.id, "solve only this problem");
  solve_cmd->add_flag("--explain", o.explain, "print the rel and pair score tables");

  CLI::App* schema_cmd = app.add_subcommand("schema-dump", "print extracted schemas");
  add_corpus_flags(schema_cmd, o);
  schema_cmd->add_option("--id", o.id, "dump only this problem");

  try {
    app.parse(argc, argv);
    if (train_cmd->parsed()) return run_train(o);
    if (cv_cmd->parsed()) return run_cv(o);
    if (ablate_cmd->parsed()) return run_ablate(o);
    if (solve_cmd->parsed()) return run_solve(o);
    if (schema_cmd->parsed()) return run_schema_dump(o);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
