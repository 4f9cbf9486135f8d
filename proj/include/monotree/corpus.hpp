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

#ifndef MONOTREE_CORPUS_HPP_
#define MONOTREE_CORPUS_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotree/expr.hpp"
#include "monotree/rational.hpp"

namespace monotree {

struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};
// The gold tree does not evaluate to the stated answer.
struct GoldMismatchError : std::runtime_error {
  explicit GoldMismatchError(const std::string& what) : std::runtime_error(what) {}
};
// The gold tree reuses a quantity or references one that does not exist.
struct InvalidGoldError : std::runtime_error {
  explicit InvalidGoldError(const std::string& what) : std::runtime_error(what) {}
};
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct Token {
  std::string text;
  std::string pos;       // Penn-style part of speech tag
  int head;              // token index of the dependency head, -1 for root
  std::string deprel;    // dependency relation to the head
  std::string chunk;     // BIO shallow-parse tag, e.g. "B-NP", "I-NP", "O"
  int sentence_id;
  std::string lemma;     // optional; empty means "use the surface form"
};

struct Quantity {
  int index;           // position among the problem's quantities, 0-based
  Rational value;
  int token_position;  // index of the numeric token mentioning this quantity
};

// One arithmetic word problem with its annotation. gold_tree, when present,
// is stored in canonical monotone form.
struct Problem {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<Quantity> quantities;
  Rational answer;
  std::optional<Expr> gold_tree;
  int fold = 0;

  std::map<int, Rational> quantity_values() const;
};

// Per-quantity relevance plus the LCA label of every pair of quantities that
// appear in the gold tree.
struct GoldLabels {
  std::map<int, bool> relevant;
  LcaMap lca;
};

// Parses one JSONL record. Field names and shapes are validated strictly;
// any structural problem raises FormatError, a gold tree with reused or
// out-of-range leaves raises InvalidGoldError, and a gold tree whose value
// differs from the answer raises GoldMismatchError. Gold trees are
// monotonized and canonicalized on load.
Problem parse_problem(const std::string& json_line);

// Inverse of parse_problem, modulo insignificant whitespace.
std::string serialize_problem(const Problem& p);

// Requires a gold tree.
GoldLabels derive_labels(const Problem& p);

struct LoadIssue {
  int line;  // 1-based
  std::string message;
};

struct LoadResult {
  std::vector<Problem> problems;
  std::vector<LoadIssue> issues;
};

// Reads a JSONL corpus. With strict=true any bad record aborts the load with
// the offending line number in the error; otherwise bad records are collected
// in `issues` and the rest are returned. Unreadable files raise IoError.
LoadResult load_corpus(const std::string& path, bool strict = true);

// True for tokens that mention a number, including hyphenated numeric
// modifiers such as "4-dollar".
bool numeric_token(const std::string& text);

}  // namespace monotree

#endif  // MONOTREE_CORPUS_HPP_
