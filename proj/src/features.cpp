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

#include "monotree/features.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace monotree {

namespace {

constexpr int kNeighborWindow = 5;

std::set<std::string> question_token_set(const Problem& p,
                                         const std::optional<QuestionSpan>& question) {
  std::set<std::string> out;
  if (!question) return out;
  for (int i = question->span.begin; i < question->span.end; ++i) {
    std::string norm = normalize_token(p.tokens[i].text);
    if (!norm.empty()) out.insert(std::move(norm));
  }
  return out;
}

std::set<std::string> unit_texts(const Problem& p, const QuantitySchema& s) {
  std::set<std::string> out;
  for (int t : s.unit_tokens) {
    std::string norm = normalize_token(p.tokens[t].text);
    if (!norm.empty()) out.insert(std::move(norm));
  }
  return out;
}

int unit_match_count(const Problem& p, const QuantitySchema& s,
                     const std::set<std::string>& question) {
  int n = 0;
  for (int t : s.unit_tokens) {
    if (question.count(normalize_token(p.tokens[t].text))) ++n;
  }
  return n;
}

// The head of a noun phrase: its last nominal token (or last token).
std::string np_head_text(const Problem& p, const TokenSpan& span) {
  for (int i = span.end - 1; i >= span.begin; --i) {
    if (p.tokens[i].pos.rfind("NN", 0) == 0) return normalize_token(p.tokens[i].text);
  }
  return normalize_token(p.tokens[span.end - 1].text);
}

int np_match_count(const Problem& p, const QuantitySchema& s,
                   const std::set<std::string>& question) {
  int n = 0;
  for (const TokenSpan& np : s.related_nps) {
    if (question.count(np_head_text(p, np))) ++n;
  }
  return n;
}

std::string verb_lemma(const Problem& p, int verb_token) {
  const Token& t = p.tokens[verb_token];
  return normalize_token(t.lemma.empty() ? t.text : t.lemma);
}

bool rate_in_question(const Problem& p, const QuantitySchema& s,
                      const std::set<std::string>& question) {
  if (!s.rate) return false;
  for (const TokenSpan& span : {s.rate->unit_a, s.rate->unit_b}) {
    for (const std::string& word : rate_component_texts(p, span)) {
      if (question.count(word)) return true;
    }
  }
  return false;
}

bool component_matches(const Problem& p, const TokenSpan& component,
                       const std::set<std::string>& other_units) {
  for (const std::string& word : rate_component_texts(p, component)) {
    if (other_units.count(word)) return true;
  }
  return false;
}

void emit_neighbors(const Problem& p, const Quantity& q, const std::string& prefix,
                    FeatureVector* fv) {
  int lo = std::max(0, q.token_position - kNeighborWindow);
  int hi = std::min(static_cast<int>(p.tokens.size()) - 1, q.token_position + kNeighborWindow);
  for (int i = lo; i <= hi; ++i) {
    if (i == q.token_position) continue;
    if (p.tokens[i].sentence_id != p.tokens[q.token_position].sentence_id) continue;
    const std::string& pos = p.tokens[i].pos;
    if (pos == "RB" || pos == "RBR" || pos == "RBS" || pos == "JJR") {
      std::string norm = normalize_token(p.tokens[i].text);
      if (!norm.empty()) (*fv)[prefix + norm] = 1.0;
    }
  }
}

// Every unordered pair of emitted indicators, named "f&g" with the two names
// sorted so the conjunction is order-insensitive.
void add_conjunctions(FeatureVector* fv) {
  std::vector<std::pair<std::string, double>> base(fv->begin(), fv->end());
  for (size_t i = 0; i < base.size(); ++i) {
    for (size_t j = i + 1; j < base.size(); ++j) {
      (*fv)[base[i].first + "&" + base[j].first] =
          std::min(base[i].second, base[j].second);
    }
  }
}

}  // namespace

FeatureVector relevance_features(const Problem& p,
                                 const std::vector<QuantitySchema>& schemas,
                                 const std::optional<QuestionSpan>& question,
                                 int quantity_index,
                                 const FeatureConfig& config) {
  if (schemas.size() != p.quantities.size()) {
    throw std::invalid_argument("relevance_features: schemas do not cover all quantities");
  }
  const QuantitySchema& self = schemas.at(quantity_index);
  std::set<std::string> qset = question_token_set(p, question);
  FeatureVector fv;

  if (!config.drop_unit) {
    std::vector<int> counts;
    for (const QuantitySchema& s : schemas) counts.push_back(unit_match_count(p, s, qset));
    int own = counts[quantity_index];
    int best = *std::max_element(counts.begin(), counts.end());
    if (own > 0) fv["UNIT_IN_QUESTION"] = 1.0;
    if (best > own) fv["OTHER_UNIT_BETTER"] = 1.0;
    int winners = static_cast<int>(std::count(counts.begin(), counts.end(), best));
    fv["NUM_MAX_MATCH_QUANTITIES=" + std::to_string(winners)] = 1.0;
  }

  if (!config.drop_np) {
    std::vector<int> counts;
    for (const QuantitySchema& s : schemas) counts.push_back(np_match_count(p, s, qset));
    int own = counts[quantity_index];
    int best = *std::max_element(counts.begin(), counts.end());
    if (own > 0) fv["NP_IN_QUESTION"] = 1.0;
    if (best > own) fv["OTHER_NP_BETTER"] = 1.0;
  }

  if (!config.drop_misc) {
    size_t n = p.quantities.size();
    fv["NUM_QUANTITIES=" + (n <= 3 ? std::to_string(n) : std::string("4+"))] = 1.0;
  }

  add_conjunctions(&fv);
  return fv;
}

FeatureVector lca_features(const Problem& p,
                           const std::vector<QuantitySchema>& schemas,
                           const std::optional<QuestionSpan>& question,
                           int qi, int qj,
                           const FeatureConfig& config) {
  if (schemas.size() != p.quantities.size()) {
    throw std::invalid_argument("lca_features: schemas do not cover all quantities");
  }
  const Quantity& quant_i = p.quantities.at(qi);
  const Quantity& quant_j = p.quantities.at(qj);
  if (quant_i.token_position >= quant_j.token_position) {
    throw OrderViolationError("lca_features: q" + std::to_string(qi) +
                              " does not precede q" + std::to_string(qj));
  }
  const QuantitySchema& si = schemas.at(qi);
  const QuantitySchema& sj = schemas.at(qj);
  std::set<std::string> qset = question_token_set(p, question);
  FeatureVector fv;

  if (!config.drop_individual) {
    if (si.verb) fv["VERB_i=" + verb_lemma(p, *si.verb)] = 1.0;
    if (sj.verb) fv["VERB_j=" + verb_lemma(p, *sj.verb)] = 1.0;
    if (si.rate) fv["IS_RATE_i"] = 1.0;
    if (sj.rate) fv["IS_RATE_j"] = 1.0;
    if (rate_in_question(p, si, qset)) fv["RATE_UNIT_IN_QUESTION_i"] = 1.0;
    if (rate_in_question(p, sj, qset)) fv["RATE_UNIT_IN_QUESTION_j"] = 1.0;
    emit_neighbors(p, quant_i, "NEIGHBOR_i=", &fv);
    emit_neighbors(p, quant_j, "NEIGHBOR_j=", &fv);
  }

  if (!config.drop_pair) {
    std::set<std::string> units_i = unit_texts(p, si);
    std::set<std::string> units_j = unit_texts(p, sj);
    if (si.verb && sj.verb) {
      if (verb_lemma(p, *si.verb) == verb_lemma(p, *sj.verb)) fv["SAME_VERB"] = 1.0;
      if (*si.verb == *sj.verb) fv["SAME_VERB_MENTION"] = 1.0;
    }
    if (!units_i.empty() && units_i == units_j) fv["SAME_UNIT"] = 1.0;
    bool match_a = (si.rate && component_matches(p, si.rate->unit_a, units_j)) ||
                   (sj.rate && component_matches(p, sj.rate->unit_a, units_i));
    bool match_b = (si.rate && component_matches(p, si.rate->unit_b, units_j)) ||
                   (sj.rate && component_matches(p, sj.rate->unit_b, units_i));
    if (match_a) fv["RATE_COMPONENT_MATCH_a"] = 1.0;
    if (match_b) fv["RATE_COMPONENT_MATCH_b"] = 1.0;
    if (quant_i.value > quant_j.value) fv["VALUE_I_GREATER"] = 1.0;
  }

  if (!config.drop_question) {
    if (qset.count("more") || qset.count("less") || qset.count("than")) {
      fv["QUESTION_COMPARE"] = 1.0;
    }
    if (qset.count("each") || qset.count("one")) {
      fv["QUESTION_RATE"] = 1.0;
    }
  }

  add_conjunctions(&fv);
  return fv;
}

std::string format_features(const FeatureVector& fv) {
  std::string out;
  char buf[64];
  for (const auto& [name, value] : fv) {
    std::snprintf(buf, sizeof(buf), "%g", value);
    out += name;
    out += '\t';
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace monotree
