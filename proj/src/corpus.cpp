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

#include "monotree/corpus.hpp"

#include <cctype>
#include <fstream>
#include <set>

#include <json.hpp>

namespace monotree {

using nlohmann::json;

// A numeric token starts with a digit; hyphenated numeric modifiers such as
// "4-dollar" count as numeric mentions too.
bool numeric_token(const std::string& text) {
  return !text.empty() && std::isdigit(static_cast<unsigned char>(text[0]));
}

namespace {

const json& need(const json& obj, const char* field, const char* where) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw FormatError(std::string(where) + ": missing field \"" + field + "\"");
  }
  return *it;
}

std::string need_string(const json& obj, const char* field, const char* where) {
  const json& v = need(obj, field, where);
  if (!v.is_string()) {
    throw FormatError(std::string(where) + ": field \"" + field + "\" must be a string");
  }
  return v.get<std::string>();
}

int need_int(const json& obj, const char* field, const char* where) {
  const json& v = need(obj, field, where);
  if (!v.is_number_integer()) {
    throw FormatError(std::string(where) + ": field \"" + field + "\" must be an integer");
  }
  return v.get<int>();
}

Rational need_decimal(const json& obj, const char* field, const char* where) {
  std::string text = need_string(obj, field, where);
  auto r = Rational::parse(text);
  if (!r) {
    throw FormatError(std::string(where) + ": field \"" + field +
                      "\" is not a decimal string: \"" + text + "\"");
  }
  return *r;
}

}  // namespace

std::map<int, Rational> Problem::quantity_values() const {
  std::map<int, Rational> out;
  for (const Quantity& q : quantities) out[q.index] = q.value;
  return out;
}

Problem parse_problem(const std::string& json_line) {
  json rec;
  try {
    rec = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("record is not valid JSON: ") + e.what());
  }
  if (!rec.is_object()) throw FormatError("record is not a JSON object");

  Problem p;
  p.id = need_string(rec, "id", "record");
  p.text = need_string(rec, "text", "record");
  p.fold = need_int(rec, "fold", "record");
  p.answer = need_decimal(rec, "answer", "record");

  const json& tokens = need(rec, "tokens", "record");
  if (!tokens.is_array() || tokens.empty()) {
    throw FormatError("record: \"tokens\" must be a non-empty array");
  }
  int prev_sentence = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const json& t = tokens[i];
    if (!t.is_object()) throw FormatError("token " + std::to_string(i) + " is not an object");
    const char* where = "token";
    Token tok;
    tok.text = need_string(t, "text", where);
    tok.pos = need_string(t, "pos", where);
    tok.head = need_int(t, "head", where);
    tok.deprel = need_string(t, "deprel", where);
    tok.chunk = need_string(t, "chunk", where);
    tok.sentence_id = need_int(t, "sentence_id", where);
    if (t.contains("lemma")) tok.lemma = need_string(t, "lemma", where);
    if (tok.text.empty() || tok.text.find_first_of(" \t\n") != std::string::npos) {
      throw FormatError("token " + std::to_string(i) + " text is empty or has whitespace");
    }
    if (tok.sentence_id < 0 || tok.sentence_id < prev_sentence) {
      throw FormatError("token " + std::to_string(i) + " has a decreasing sentence_id");
    }
    prev_sentence = tok.sentence_id;
    p.tokens.push_back(std::move(tok));
  }
  int n_tokens = static_cast<int>(p.tokens.size());
  for (int i = 0; i < n_tokens; ++i) {
    const Token& tok = p.tokens[i];
    if (tok.head == i) throw FormatError("token " + std::to_string(i) + " is its own head");
    if (tok.head != -1) {
      if (tok.head < 0 || tok.head >= n_tokens) {
        throw FormatError("token " + std::to_string(i) + " head out of range");
      }
      if (p.tokens[tok.head].sentence_id != tok.sentence_id) {
        throw FormatError("token " + std::to_string(i) + " head crosses a sentence boundary");
      }
    }
  }

  const json& quantities = need(rec, "quantities", "record");
  if (!quantities.is_array()) throw FormatError("record: \"quantities\" must be an array");
  int prev_position = -1;
  for (size_t i = 0; i < quantities.size(); ++i) {
    const json& q = quantities[i];
    if (!q.is_object()) throw FormatError("quantity " + std::to_string(i) + " is not an object");
    Quantity quant;
    quant.index = need_int(q, "index", "quantity");
    quant.value = need_decimal(q, "value", "quantity");
    quant.token_position = need_int(q, "token", "quantity");
    if (quant.index != static_cast<int>(i)) {
      throw FormatError("quantity " + std::to_string(i) + " has index " +
                        std::to_string(quant.index) + "; indices must be 0-based in order");
    }
    if (quant.token_position < 0 || quant.token_position >= n_tokens) {
      throw FormatError("quantity " + std::to_string(i) + " token position out of range");
    }
    if (quant.token_position <= prev_position) {
      throw FormatError("quantities must be ordered by strictly increasing token position");
    }
    prev_position = quant.token_position;
    if (!numeric_token(p.tokens[quant.token_position].text)) {
      throw FormatError("quantity " + std::to_string(i) + " points at non-numeric token \"" +
                        p.tokens[quant.token_position].text + "\"");
    }
    p.quantities.push_back(std::move(quant));
  }

  if (rec.contains("gold_tree") && !rec["gold_tree"].is_null()) {
    std::string tree_text = need_string(rec, "gold_tree", "record");
    Expr gold = [&] {
      try {
        return parse_prefix(tree_text);
      } catch (const ExprParseError& e) {
        throw FormatError(std::string("gold_tree: ") + e.what());
      }
    }();
    if (!is_valid(gold)) {
      throw InvalidGoldError("gold_tree uses a quantity more than once: " + tree_text);
    }
    for (int leaf : gold.leaf_indices()) {
      if (leaf < 0 || leaf >= static_cast<int>(p.quantities.size())) {
        throw InvalidGoldError("gold_tree references unknown quantity q" +
                               std::to_string(leaf));
      }
    }
    auto value = try_evaluate(gold, p.quantity_values());
    if (!value || *value != p.answer) {
      throw GoldMismatchError("gold_tree evaluates to " +
                              (value ? value->to_string() : std::string("a division by zero")) +
                              " but the answer is " + p.answer.to_string());
    }
    p.gold_tree = monotonize(gold);
  }

  return p;
}

std::string serialize_problem(const Problem& p) {
  json rec;
  rec["id"] = p.id;
  rec["text"] = p.text;
  rec["fold"] = p.fold;
  rec["answer"] = p.answer.to_string();
  rec["tokens"] = json::array();
  for (const Token& t : p.tokens) {
    json jt = {{"text", t.text},   {"pos", t.pos},     {"head", t.head},
               {"deprel", t.deprel}, {"chunk", t.chunk}, {"sentence_id", t.sentence_id}};
    if (!t.lemma.empty()) jt["lemma"] = t.lemma;
    rec["tokens"].push_back(std::move(jt));
  }
  rec["quantities"] = json::array();
  for (const Quantity& q : p.quantities) {
    rec["quantities"].push_back(
        {{"index", q.index}, {"value", q.value.to_string()}, {"token", q.token_position}});
  }
  if (p.gold_tree) rec["gold_tree"] = to_prefix(*p.gold_tree);
  return rec.dump();
}

GoldLabels derive_labels(const Problem& p) {
  if (!p.gold_tree) {
    throw std::invalid_argument("derive_labels: problem " + p.id + " has no gold tree");
  }
  GoldLabels out;
  std::set<int> used;
  for (int leaf : p.gold_tree->leaf_indices()) used.insert(leaf);
  for (const Quantity& q : p.quantities) {
    out.relevant[q.index] = used.count(q.index) > 0;
  }
  out.lca = lca_map(*p.gold_tree);
  return out;
}

LoadResult load_corpus(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  LoadResult result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      result.problems.push_back(parse_problem(line));
    } catch (const std::exception& e) {
      if (strict) {
        throw FormatError(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
      result.issues.push_back({line_no, e.what()});
    }
  }
  return result;
}

}  // namespace monotree
