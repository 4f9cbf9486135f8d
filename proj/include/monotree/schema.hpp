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
// Shallow semantics attached to each quantity mention: the governing verb,
// the subject, unit tokens, related noun phrases, rate structure, and the
// question span of the problem.

#ifndef MONOTREE_SCHEMA_HPP_
#define MONOTREE_SCHEMA_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monotree/corpus.hpp"

namespace monotree {

struct CyclicHeadsError : std::runtime_error {
  explicit CyclicHeadsError(const std::string& what) : std::runtime_error(what) {}
};

// Half-open token range [begin, end).
struct TokenSpan {
  int begin = 0;
  int end = 0;
  bool contains(int pos) const { return pos >= begin && pos < end; }
  bool operator==(const TokenSpan& o) const { return begin == o.begin && end == o.end; }
};

// A rate such as "9 jars per crate": unit_a is what is being counted and
// unit_b is the per-what. Either span may include determiners or the numeric
// mention itself; rate_component_texts() extracts the usable words.
struct RateComponents {
  TokenSpan unit_a;
  TokenSpan unit_b;
};

struct QuantitySchema {
  int quantity_index = 0;
  std::optional<int> verb;           // token index of the governing verb
  std::optional<TokenSpan> subject;  // noun phrase bearing a subject relation to it
  std::vector<int> unit_tokens;      // token indices, possibly borrowed from a neighbor
  std::vector<TokenSpan> related_nps;
  std::optional<RateComponents> rate;
};

enum class WhKind { HowMany, HowMuch, Other };

struct QuestionSpan {
  TokenSpan span;
  WhKind wh_kind = WhKind::Other;
};

// Walks head links from the quantity mention upward and returns the first
// token whose POS starts with "VB", or nullopt when the walk reaches the root
// without meeting one. A cycle in the head links raises CyclicHeadsError.
std::optional<int> associated_verb(const Problem& p, const Quantity& q);

// Non-numeric tokens of the chunk phrase containing the mention, extended by
// the noun phrase behind an immediately following "of". When that yields
// nothing, the units of the nearest quantity that has some are borrowed
// (ties resolved toward the earlier quantity).
std::vector<int> unit_tokens(const Problem& p, const Quantity& q);

// Noun phrases attached to the mention's phrase through chains of
// NP-PP-NP adjacency within the sentence. When the sentence mentions no
// other quantity, every noun phrase in it counts as related.
std::vector<TokenSpan> related_nps(const Problem& p, const Quantity& q);

// Recognizes per-unit rates: "... per hour", "... a day", hyphenated
// modifiers like "3-dollar", and "each"/"every" constructions.
std::optional<RateComponents> detect_rate(const Problem& p, const Quantity& q);

// Words usable for matching from a rate component span: determiners, rate
// trigger words and numeric tokens are skipped, and a hyphenated numeric
// modifier contributes the word after the hyphen.
std::vector<std::string> rate_component_texts(const Problem& p, const TokenSpan& span);

// The last sentence ending in "?", with any trailing "if"/"when" clause after
// the wh-phrase removed and the "?" excluded. Returns nullopt when no
// sentence ends in a question mark.
std::optional<QuestionSpan> extract_question(const Problem& p);

QuantitySchema extract_schema(const Problem& p, const Quantity& q);
std::vector<QuantitySchema> extract_schemas(const Problem& p);

// Lowercases and strips leading/trailing punctuation; the common currency of
// token matching across schema extraction and feature computation.
std::string normalize_token(const std::string& text);

// The chunk span containing the given token, if the token sits inside a
// B-/I- phrase at all.
std::optional<TokenSpan> chunk_phrase_at(const Problem& p, int token_position);

}  // namespace monotree

#endif  // MONOTREE_SCHEMA_HPP_
