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

#include "monotree/schema.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace monotree {

namespace {

const std::set<std::string> kDeterminers = {"the", "a",  "an",    "this",
                                            "that", "these", "those"};
const std::set<std::string> kRateTriggers = {"each", "every", "per"};
const std::set<std::string> kWhWords = {"how",  "what",  "who",   "whom", "whose",
                                        "which", "where", "why", "when"};

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

struct ChunkSpan {
  std::string type;  // "NP", "VP", "PP", ... or "O" for an unchunked run
  TokenSpan span;
};

std::string chunk_type(const std::string& tag) {
  if (tag == "O" || tag.empty()) return "O";
  size_t dash = tag.find('-');
  return dash == std::string::npos ? tag : tag.substr(dash + 1);
}

bool chunk_continues(const std::string& tag) { return starts_with(tag, "I-"); }

TokenSpan sentence_of(const Problem& p, int token_position) {
  int sid = p.tokens[token_position].sentence_id;
  int begin = token_position, end = token_position + 1;
  while (begin > 0 && p.tokens[begin - 1].sentence_id == sid) --begin;
  while (end < static_cast<int>(p.tokens.size()) && p.tokens[end].sentence_id == sid) ++end;
  return {begin, end};
}

// The shallow-parse phrases of a sentence, with unchunked runs kept as "O"
// entries so that adjacency checks do not jump across them.
std::vector<ChunkSpan> sentence_chunks(const Problem& p, const TokenSpan& sentence) {
  std::vector<ChunkSpan> out;
  int i = sentence.begin;
  while (i < sentence.end) {
    std::string type = chunk_type(p.tokens[i].chunk);
    int j = i + 1;
    if (type == "O") {
      while (j < sentence.end && chunk_type(p.tokens[j].chunk) == "O") ++j;
    } else {
      while (j < sentence.end && chunk_continues(p.tokens[j].chunk) &&
             chunk_type(p.tokens[j].chunk) == type) {
        ++j;
      }
    }
    out.push_back({std::move(type), {i, j}});
    i = j;
  }
  return out;
}

// Direct unit extraction, without the neighbor fallback.
std::vector<int> direct_unit_tokens(const Problem& p, const Quantity& q) {
  std::vector<int> units;
  auto phrase = chunk_phrase_at(p, q.token_position);
  if (!phrase) return units;
  for (int i = phrase->begin; i < phrase->end; ++i) {
    if (!numeric_token(p.tokens[i].text)) units.push_back(i);
  }
  // "3 crates of small jars": pull in the noun phrase behind the "of".
  TokenSpan sentence = sentence_of(p, q.token_position);
  std::vector<ChunkSpan> chunks = sentence_chunks(p, sentence);
  for (size_t c = 0; c + 2 < chunks.size(); ++c) {
    if (!(chunks[c].span == *phrase)) continue;
    const ChunkSpan& pp = chunks[c + 1];
    const ChunkSpan& np = chunks[c + 2];
    if (pp.type == "PP" && pp.span.end - pp.span.begin == 1 &&
        normalize_token(p.tokens[pp.span.begin].text) == "of" && np.type == "NP") {
      for (int i = np.span.begin; i < np.span.end; ++i) {
        if (!numeric_token(p.tokens[i].text)) units.push_back(i);
      }
    }
    break;
  }
  return units;
}

int quantities_in_sentence(const Problem& p, const TokenSpan& sentence) {
  int n = 0;
  for (const Quantity& q : p.quantities) {
    if (sentence.contains(q.token_position)) ++n;
  }
  return n;
}

}  // namespace

std::string normalize_token(const std::string& text) {
  size_t begin = 0, end = text.size();
  auto is_punct = [](unsigned char c) { return std::ispunct(c); };
  while (begin < end && is_punct(text[begin])) ++begin;
  while (end > begin && is_punct(text[end - 1])) --end;
  std::string out;
  out.reserve(end - begin);
  for (size_t i = begin; i < end; ++i) {
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
  }
  return out;
}

std::optional<TokenSpan> chunk_phrase_at(const Problem& p, int token_position) {
  TokenSpan sentence = sentence_of(p, token_position);
  for (const ChunkSpan& c : sentence_chunks(p, sentence)) {
    if (c.type != "O" && c.span.contains(token_position)) return c.span;
  }
  return std::nullopt;
}

std::optional<int> associated_verb(const Problem& p, const Quantity& q) {
  std::set<int> visited;
  int pos = q.token_position;
  while (pos != -1) {
    if (!visited.insert(pos).second) {
      throw CyclicHeadsError("head links cycle at token " + std::to_string(pos) +
                             " in problem " + p.id);
    }
    if (starts_with(p.tokens[pos].pos, "VB")) return pos;
    pos = p.tokens[pos].head;
  }
  return std::nullopt;
}

std::vector<int> unit_tokens(const Problem& p, const Quantity& q) {
  std::vector<int> units = direct_unit_tokens(p, q);
  if (!units.empty()) return units;
  // Borrow from the nearest quantity with units of its own; on a distance
  // tie the earlier mention wins.
  const Quantity* best = nullptr;
  std::vector<int> best_units;
  int best_distance = 0;
  for (const Quantity& other : p.quantities) {
    if (other.index == q.index) continue;
    std::vector<int> other_units = direct_unit_tokens(p, other);
    if (other_units.empty()) continue;
    int distance = std::abs(other.token_position - q.token_position);
    if (!best || distance < best_distance ||
        (distance == best_distance && other.token_position < best->token_position)) {
      best = &other;
      best_units = std::move(other_units);
      best_distance = distance;
    }
  }
  return best_units;
}

std::vector<TokenSpan> related_nps(const Problem& p, const Quantity& q) {
  TokenSpan sentence = sentence_of(p, q.token_position);
  std::vector<ChunkSpan> chunks = sentence_chunks(p, sentence);

  if (quantities_in_sentence(p, sentence) == 1) {
    std::vector<TokenSpan> all;
    for (const ChunkSpan& c : chunks) {
      if (c.type == "NP") all.push_back(c.span);
    }
    return all;
  }

  // NP-PP-NP adjacency graph over the sentence's phrases, followed through
  // chains: "in a pile on the desk" links the mention to both noun phrases.
  std::vector<int> nps;
  int own = -1;
  for (size_t i = 0; i < chunks.size(); ++i) {
    if (chunks[i].type == "NP") {
      nps.push_back(static_cast<int>(i));
      if (chunks[i].span.contains(q.token_position)) own = static_cast<int>(i);
    }
  }
  if (own < 0) return {};
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i + 2 < chunks.size(); ++i) {
    if (chunks[i].type == "NP" && chunks[i + 1].type == "PP" && chunks[i + 2].type == "NP") {
      edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 2));
    }
  }
  std::set<int> component = {own};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [a, b] : edges) {
      if (component.count(a) != component.count(b)) {
        component.insert(a);
        component.insert(b);
        grew = true;
      }
    }
  }
  std::vector<TokenSpan> out;
  for (int i : nps) {
    if (i != own && component.count(i)) out.push_back(chunks[i].span);
  }
  return out;
}

std::vector<std::string> rate_component_texts(const Problem& p, const TokenSpan& span) {
  std::vector<std::string> out;
  for (int i = span.begin; i < span.end && i < static_cast<int>(p.tokens.size()); ++i) {
    const std::string& raw = p.tokens[i].text;
    if (numeric_token(raw)) {
      size_t dash = raw.find('-');
      if (dash != std::string::npos && dash + 1 < raw.size()) {
        std::string word = normalize_token(raw.substr(dash + 1));
        if (!word.empty()) out.push_back(std::move(word));
      }
      continue;
    }
    std::string norm = normalize_token(raw);
    if (norm.empty() || kDeterminers.count(norm) || kRateTriggers.count(norm)) continue;
    out.push_back(std::move(norm));
  }
  return out;
}

std::optional<RateComponents> detect_rate(const Problem& p, const Quantity& q) {
  const int pos = q.token_position;
  const std::string& mention = p.tokens[pos].text;
  TokenSpan sentence = sentence_of(p, pos);
  std::vector<ChunkSpan> chunks = sentence_chunks(p, sentence);
  std::optional<TokenSpan> phrase = chunk_phrase_at(p, pos);
  TokenSpan own = phrase.value_or(TokenSpan{pos, pos + 1});

  auto np_at = [&](int token) -> std::optional<TokenSpan> {
    for (const ChunkSpan& c : chunks) {
      if (c.type == "NP" && c.span.contains(token)) return c.span;
    }
    return std::nullopt;
  };

  // "4-dollar toys": the mention itself carries the first unit.
  size_t dash = mention.find('-');
  if (dash != std::string::npos && dash + 1 < mention.size() &&
      !normalize_token(mention.substr(dash + 1)).empty()) {
    TokenSpan rest{pos + 1, std::max(own.end, pos + 1)};
    return RateComponents{{pos, pos + 1}, rest};
  }

  // "7 kilometers per hour", "30 miles a day".
  int after = own.end;
  if (after < sentence.end) {
    std::string trigger = normalize_token(p.tokens[after].text);
    if (trigger == "per" || trigger == "a" || trigger == "an") {
      int next = after + 1;
      if (next < sentence.end) {
        if (auto np = np_at(next); np && np->begin == next) {
          return RateComponents{own, *np};
        }
        if (starts_with(p.tokens[next].pos, "NN")) {
          return RateComponents{own, {next, next + 1}};
        }
      }
    }
  }

  // "Each ticket costs 2 dollars", "each of the crates held exactly 9 jars".
  for (int t = sentence.begin; t < sentence.end; ++t) {
    std::string word = normalize_token(p.tokens[t].text);
    if (word != "each" && word != "every") continue;
    std::optional<TokenSpan> candidate = np_at(t);
    if (candidate) {
      bool has_content = false;
      for (int i = candidate->begin; i < candidate->end; ++i) {
        if (i == t || numeric_token(p.tokens[i].text)) continue;
        if (!kDeterminers.count(normalize_token(p.tokens[i].text))) has_content = true;
      }
      if (!has_content) candidate = std::nullopt;
    }
    if (!candidate) {
      // "each of the crates": step past an optional "of" to the noun phrase.
      int next = t + 1;
      if (next < sentence.end && normalize_token(p.tokens[next].text) == "of") ++next;
      for (const ChunkSpan& c : chunks) {
        if (c.type == "NP" && c.span.begin >= next) {
          candidate = c.span;
          break;
        }
      }
    }
    if (!candidate) continue;
    if (*candidate == own || candidate->contains(pos)) continue;
    return RateComponents{own, *candidate};
  }

  return std::nullopt;
}

std::optional<QuestionSpan> extract_question(const Problem& p) {
  int n = static_cast<int>(p.tokens.size());
  std::optional<TokenSpan> sentence;
  for (int i = 0; i < n; ++i) {
    TokenSpan s = sentence_of(p, i);
    if (p.tokens[s.end - 1].text == "?") sentence = s;
    i = s.end - 1;
  }
  if (!sentence) return std::nullopt;

  int wh_pos = sentence->begin;
  for (int i = sentence->begin; i < sentence->end; ++i) {
    if (kWhWords.count(normalize_token(p.tokens[i].text))) {
      wh_pos = i;
      break;
    }
  }
  int end = sentence->end - 1;  // drop the "?"
  for (int i = wh_pos + 1; i < end; ++i) {
    std::string word = normalize_token(p.tokens[i].text);
    if (word == "if" || word == "when") {
      end = i;
      break;
    }
  }
  if (end <= sentence->begin) end = sentence->end - 1;

  QuestionSpan out;
  out.span = {sentence->begin, end};
  std::string w0 = normalize_token(p.tokens[out.span.begin].text);
  std::string w1 = out.span.begin + 1 < out.span.end
                       ? normalize_token(p.tokens[out.span.begin + 1].text)
                       : "";
  if (w0 == "how" && w1 == "many") {
    out.wh_kind = WhKind::HowMany;
  } else if (w0 == "how" && w1 == "much") {
    out.wh_kind = WhKind::HowMuch;
  } else {
    out.wh_kind = WhKind::Other;
  }
  return out;
}

QuantitySchema extract_schema(const Problem& p, const Quantity& q) {
  QuantitySchema s;
  s.quantity_index = q.index;
  s.verb = associated_verb(p, q);
  if (s.verb) {
    for (int i = 0; i < static_cast<int>(p.tokens.size()); ++i) {
      if (p.tokens[i].head == *s.verb &&
          p.tokens[i].deprel.find("subj") != std::string::npos) {
        auto np = chunk_phrase_at(p, i);
        s.subject = np.value_or(TokenSpan{i, i + 1});
        break;
      }
    }
  }
  s.unit_tokens = unit_tokens(p, q);
  s.related_nps = related_nps(p, q);
  s.rate = detect_rate(p, q);
  return s;
}

std::vector<QuantitySchema> extract_schemas(const Problem& p) {
  std::vector<QuantitySchema> out;
  out.reserve(p.quantities.size());
  for (const Quantity& q : p.quantities) out.push_back(extract_schema(p, q));
  return out;
}

}  // namespace monotree
