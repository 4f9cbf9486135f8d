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

#include "monotree/infer.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "monotree/enumerate.hpp"

namespace monotree {

ModelScorer::ModelScorer(const Problem& problem, const LinearModel& relevance_model,
                         const LinearModel& lca_model, const FeatureConfig& features) {
  auto schemas = extract_schemas(problem);
  auto question = extract_question(problem);
  int n = static_cast<int>(problem.quantities.size());
  rel_scores_.reserve(n);
  for (int q = 0; q < n; ++q) {
    FeatureVector fv = relevance_features(problem, schemas, question, q, features);
    rel_scores_.push_back(score_rel(relevance_model, fv));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      FeatureVector fv = lca_features(problem, schemas, question, i, j, features);
      std::array<double, 6> margins{};
      for (LcaLabel label : {LcaLabel::Plus, LcaLabel::Times, LcaLabel::Minus,
                             LcaLabel::MinusReverse, LcaLabel::Div, LcaLabel::DivReverse}) {
        margins[static_cast<size_t>(label)] = score_pair(lca_model, fv, label);
      }
      pair_scores_.emplace(std::make_pair(i, j), margins);
    }
  }
}

double ModelScorer::rel(int quantity_index) const {
  return rel_scores_.at(quantity_index);
}

double ModelScorer::pair(int qi, int qj, LcaLabel label) const {
  return pair_scores_.at(std::make_pair(qi, qj)).at(static_cast<size_t>(label));
}

OracleScorer::OracleScorer(const GoldLabels& gold, int quantity_count) : gold_(gold.lca) {
  rel_scores_.reserve(quantity_count);
  for (int q = 0; q < quantity_count; ++q) {
    auto it = gold.relevant.find(q);
    bool relevant = it != gold.relevant.end() && it->second;
    rel_scores_.push_back(relevant ? -1.0 : 1.0);
  }
}

double OracleScorer::rel(int quantity_index) const {
  return rel_scores_.at(quantity_index);
}

double OracleScorer::pair(int qi, int qj, LcaLabel label) const {
  auto it = gold_.find(std::make_pair(qi, qj));
  return it != gold_.end() && it->second == label ? 1.0 : 0.0;
}

double score_expression(const Expr& tree, const Scorer& scorer, double w_rel,
                        int quantity_count) {
  std::vector<int> leaves = tree.leaf_indices();
  std::set<int> used(leaves.begin(), leaves.end());
  double rel_sum = 0.0;
  for (int q = 0; q < quantity_count; ++q) {
    if (!used.count(q)) rel_sum += scorer.rel(q);
  }
  double pair_sum = 0.0;
  for (const auto& [key, label] : lca_map(tree)) {
    pair_sum += scorer.pair(key.first, key.second, label);
  }
  return w_rel * rel_sum + pair_sum;
}

bool satisfies_constraints(const Rational& value, const InferenceConfig& config,
                           WhKind wh_kind) {
  if (config.require_positive && value.is_negative()) return false;
  if (config.require_integral && wh_kind == WhKind::HowMany && !value.is_integral()) {
    return false;
  }
  return true;
}

bool satisfies_constraints(const Expr& tree, const Problem& problem,
                           const InferenceConfig& config) {
  std::optional<Rational> value = try_evaluate(tree, problem.quantity_values());
  if (!value) return false;
  WhKind wh = WhKind::Other;
  if (auto question = extract_question(problem)) wh = question->wh_kind;
  return satisfies_constraints(*value, config, wh);
}

namespace {

struct Term {
  Expr tree;
  Rational value;
  double pair_score;
  std::string serial;
};

struct State {
  std::vector<int> irrelevant;
  std::vector<Term> terms;  // sorted by serial
  double rel_sum = 0.0;
  double score = 0.0;
  std::string key;
};

void finish_state(State& s, double w_rel) {
  double pair_sum = 0.0;
  std::string key;
  for (int q : s.irrelevant) {
    key += std::to_string(q);
    key += ',';
  }
  key += '#';
  for (const Term& t : s.terms) {
    pair_sum += t.pair_score;
    key += t.serial;
    key += ';';
  }
  s.score = w_rel * s.rel_sum + pair_sum;
  s.key = std::move(key);
}

void keep_best(std::map<std::string, State>& pool, State&& s) {
  auto it = pool.find(s.key);
  if (it == pool.end()) {
    pool.emplace(s.key, std::move(s));
  } else if (s.score > it->second.score) {
    it->second = std::move(s);
  }
}

void prune(std::vector<State>& states, int width) {
  std::sort(states.begin(), states.end(), [](const State& a, const State& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.key < b.key;
  });
  if (static_cast<int>(states.size()) > width) states.resize(width);
}

// Joins two terms, canonicalizes the result, and rescores it from scratch.
// Rescoring is unavoidable: canonicalization can merge operation chains and
// relabel pairs that were internal to the original terms.
std::optional<Term> join_terms(const Term& left, const Term& right, Op op,
                               const Scorer& scorer) {
  std::optional<Rational> value;
  switch (op) {
    case Op::Add: value = left.value + right.value; break;
    case Op::Sub: value = left.value - right.value; break;
    case Op::Mul: value = left.value * right.value; break;
    case Op::Div: value = checked_div(left.value, right.value); break;
  }
  if (!value) return std::nullopt;
  Expr tree = monotonize(Expr::node(op, left.tree, right.tree));
  double pair_score = 0.0;
  for (const auto& [key, label] : lca_map(tree)) {
    pair_score += scorer.pair(key.first, key.second, label);
  }
  std::string serial = to_prefix(tree);
  return Term{std::move(tree), std::move(*value), pair_score, std::move(serial)};
}

State joined_state(const State& parent, size_t a, size_t b, Term&& merged, double w_rel) {
  State next;
  next.irrelevant = parent.irrelevant;
  next.rel_sum = parent.rel_sum;
  next.terms.reserve(parent.terms.size() - 1);
  for (size_t k = 0; k < parent.terms.size(); ++k) {
    if (k != a && k != b) next.terms.push_back(parent.terms[k]);
  }
  auto pos = std::lower_bound(next.terms.begin(), next.terms.end(), merged,
                              [](const Term& x, const Term& y) { return x.serial < y.serial; });
  next.terms.insert(pos, std::move(merged));
  finish_state(next, w_rel);
  return next;
}

}  // namespace

std::vector<Candidate> beam_search(const Problem& problem, const Scorer& scorer,
                                   const InferenceConfig& config) {
  int n = static_cast<int>(problem.quantities.size());
  if (n < 2) {
    throw TooFewQuantitiesError("too few quantities: problem " + problem.id + " has " +
                                std::to_string(n) + "; need at least 2");
  }
  if (n > 16) {
    throw TooManyQuantitiesError("problem " + problem.id + " has " + std::to_string(n) +
                                 " quantities; beam search supports at most 16");
  }
  if (config.beam_width < 1) throw std::invalid_argument("beam width must be positive");

  std::vector<Term> leaf_terms;
  leaf_terms.reserve(n);
  for (int q = 0; q < n; ++q) {
    leaf_terms.push_back(Term{Expr::leaf(q), problem.quantities[q].value, 0.0,
                              to_prefix(Expr::leaf(q))});
  }

  std::vector<State> active;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    State s;
    for (int q = 0; q < n; ++q) {
      if (mask & (1u << q)) {
        s.terms.push_back(leaf_terms[q]);
      } else {
        s.irrelevant.push_back(q);
        s.rel_sum += scorer.rel(q);
      }
    }
    finish_state(s, config.w_rel);
    active.push_back(std::move(s));
  }
  prune(active, config.beam_width);

  std::map<std::string, State> finals;
  while (!active.empty()) {
    std::map<std::string, State> expanded;
    for (const State& s : active) {
      for (size_t a = 0; a < s.terms.size(); ++a) {
        for (size_t b = a + 1; b < s.terms.size(); ++b) {
          const std::pair<const Term*, const Term*> joins[] = {
              {&s.terms[a], &s.terms[b]}, {&s.terms[b], &s.terms[a]}};
          for (Op op : {Op::Add, Op::Mul}) {
            if (auto merged = join_terms(s.terms[a], s.terms[b], op, scorer)) {
              State next = joined_state(s, a, b, std::move(*merged), config.w_rel);
              keep_best(next.terms.size() == 1 ? finals : expanded, std::move(next));
            }
          }
          for (Op op : {Op::Sub, Op::Div}) {
            for (const auto& [left, right] : joins) {
              if (auto merged = join_terms(*left, *right, op, scorer)) {
                State next = joined_state(s, a, b, std::move(*merged), config.w_rel);
                keep_best(next.terms.size() == 1 ? finals : expanded, std::move(next));
              }
            }
          }
        }
      }
    }
    active.clear();
    active.reserve(expanded.size());
    for (auto& [key, state] : expanded) active.push_back(std::move(state));
    prune(active, config.beam_width);
  }

  std::vector<State> ranked;
  ranked.reserve(finals.size());
  for (auto& [key, state] : finals) ranked.push_back(std::move(state));
  std::sort(ranked.begin(), ranked.end(), [](const State& a, const State& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.terms[0].serial < b.terms[0].serial;
  });
  if (static_cast<int>(ranked.size()) > config.beam_width) ranked.resize(config.beam_width);

  std::vector<Candidate> out;
  out.reserve(ranked.size());
  for (State& s : ranked) {
    out.push_back(Candidate{std::move(s.terms[0].tree), std::move(s.terms[0].value), s.score});
  }
  return out;
}

Solution solve(const Problem& problem, const Scorer& scorer, const InferenceConfig& config) {
  std::vector<Candidate> candidates = beam_search(problem, scorer, config);
  if (candidates.empty()) {
    throw NoEvaluableCandidateError("no evaluable candidate tree for problem " + problem.id);
  }
  WhKind wh = WhKind::Other;
  if (auto question = extract_question(problem)) wh = question->wh_kind;
  for (const Candidate& c : candidates) {
    if (satisfies_constraints(c.value, config, wh)) {
      return Solution{c.tree, c.value, c.score, true};
    }
  }
  const Candidate& top = candidates.front();
  return Solution{top.tree, top.value, top.score, false};
}

double tune_w_rel(const std::vector<Problem>& problems,
                  const std::function<std::unique_ptr<Scorer>(const Problem&)>& make_scorer,
                  const InferenceConfig& config) {
  std::vector<double> grid = config.w_rel_grid;
  if (grid.empty()) return config.w_rel;
  std::sort(grid.begin(), grid.end());

  std::vector<std::unique_ptr<Scorer>> scorers;
  scorers.reserve(problems.size());
  for (const Problem& p : problems) scorers.push_back(make_scorer(p));

  double best_w = grid.front();
  int best_solved = -1;
  for (double w : grid) {
    InferenceConfig trial = config;
    trial.w_rel = w;
    int solved = 0;
    for (size_t i = 0; i < problems.size(); ++i) {
      try {
        Solution s = solve(problems[i], *scorers[i], trial);
        if (s.value == problems[i].answer) ++solved;
      } catch (const TooFewQuantitiesError&) {
      } catch (const NoEvaluableCandidateError&) {
      }
    }
    if (solved > best_solved) {
      best_solved = solved;
      best_w = w;
    }
  }
  return best_w;
}

}  // namespace monotree
