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

#include "monotree/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace monotree {

LcaLabel reverse_label(LcaLabel label) {
  switch (label) {
    case LcaLabel::Minus: return LcaLabel::MinusReverse;
    case LcaLabel::MinusReverse: return LcaLabel::Minus;
    case LcaLabel::Div: return LcaLabel::DivReverse;
    case LcaLabel::DivReverse: return LcaLabel::Div;
    default: return label;
  }
}

const char* label_name(LcaLabel label) {
  switch (label) {
    case LcaLabel::Plus: return "PLUS";
    case LcaLabel::Times: return "TIMES";
    case LcaLabel::Minus: return "MINUS";
    case LcaLabel::MinusReverse: return "MINUS_REVERSE";
    case LcaLabel::Div: return "DIV";
    case LcaLabel::DivReverse: return "DIV_REVERSE";
  }
  return "?";
}

std::optional<LcaLabel> label_from_name(const std::string& name) {
  static const std::map<std::string, LcaLabel> kNames = {
      {"PLUS", LcaLabel::Plus},
      {"TIMES", LcaLabel::Times},
      {"MINUS", LcaLabel::Minus},
      {"MINUS_REVERSE", LcaLabel::MinusReverse},
      {"DIV", LcaLabel::Div},
      {"DIV_REVERSE", LcaLabel::DivReverse},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

ChainKind family_of(Op op) {
  return (op == Op::Add || op == Op::Sub) ? ChainKind::AddSub : ChainKind::MulDiv;
}

// --- Expr ------------------------------------------------------------------

Expr Expr::leaf(int quantity_index) {
  auto n = std::make_shared<Node>();
  n->is_leaf = true;
  n->leaf_index = quantity_index;
  n->op = Op::Add;
  n->leaf_count = 1;
  n->min_leaf = quantity_index;
  return Expr(std::move(n));
}

Expr Expr::node(Op op, const Expr& left, const Expr& right) {
  auto n = std::make_shared<Node>();
  n->is_leaf = false;
  n->leaf_index = -1;
  n->op = op;
  n->left = left.node_;
  n->right = right.node_;
  n->leaf_count = left.leaf_count() + right.leaf_count();
  n->min_leaf = std::min(left.min_leaf(), right.min_leaf());
  return Expr(std::move(n));
}

int Expr::leaf_index() const {
  if (!node_->is_leaf) throw std::logic_error("leaf_index() on internal node");
  return node_->leaf_index;
}

Op Expr::op() const {
  if (node_->is_leaf) throw std::logic_error("op() on leaf");
  return node_->op;
}

Expr Expr::left() const {
  if (node_->is_leaf) throw std::logic_error("left() on leaf");
  return Expr(node_->left);
}

Expr Expr::right() const {
  if (node_->is_leaf) throw std::logic_error("right() on leaf");
  return Expr(node_->right);
}

std::vector<int> Expr::leaf_indices() const {
  std::vector<int> out;
  out.reserve(leaf_count());
  std::function<void(const Node*)> walk = [&](const Node* n) {
    if (n->is_leaf) {
      out.push_back(n->leaf_index);
    } else {
      walk(n->left.get());
      walk(n->right.get());
    }
  };
  walk(node_.get());
  return out;
}

bool Expr::contains_leaf(int quantity_index) const {
  const Node* n = node_.get();
  if (quantity_index < n->min_leaf) return false;
  if (n->is_leaf) return n->leaf_index == quantity_index;
  return Expr(n->left).contains_leaf(quantity_index) ||
         Expr(n->right).contains_leaf(quantity_index);
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->is_leaf != b.node_->is_leaf) return false;
  if (a.node_->is_leaf) return a.node_->leaf_index == b.node_->leaf_index;
  return a.node_->op == b.node_->op && a.left() == b.left() && a.right() == b.right();
}

// --- Evaluation --------------------------------------------------------------

std::optional<Rational> try_evaluate(const Expr& tree,
                                     const std::map<int, Rational>& values) {
  if (tree.is_leaf()) {
    auto it = values.find(tree.leaf_index());
    if (it == values.end()) {
      throw MissingQuantityError("no value for leaf q" + std::to_string(tree.leaf_index()));
    }
    return it->second;
  }
  auto l = try_evaluate(tree.left(), values);
  if (!l) return std::nullopt;
  auto r = try_evaluate(tree.right(), values);
  if (!r) return std::nullopt;
  switch (tree.op()) {
    case Op::Add: return *l + *r;
    case Op::Sub: return *l - *r;
    case Op::Mul: return *l * *r;
    case Op::Div: return checked_div(*l, *r);
  }
  return std::nullopt;
}

Rational evaluate(const Expr& tree, const std::map<int, Rational>& values) {
  auto v = try_evaluate(tree, values);
  if (!v) throw DivByZeroError();
  return *v;
}

// --- Structural predicates ---------------------------------------------------

bool is_valid(const Expr& tree) {
  std::set<int> seen;
  for (int q : tree.leaf_indices()) {
    if (!seen.insert(q).second) return false;
  }
  return true;
}

bool is_monotonic(const Expr& tree) {
  if (tree.is_leaf()) return true;
  Op parent = tree.op();
  for (const Expr& child : {tree.left(), tree.right()}) {
    if (!child.is_leaf()) {
      Op c = child.op();
      if (parent == Op::Add && c == Op::Sub) return false;
      if (parent == Op::Mul && c == Op::Div) return false;
      if (parent == Op::Sub && c == Op::Sub) return false;
      if (parent == Op::Div && c == Op::Div) return false;
    }
    if (!is_monotonic(child)) return false;
  }
  return true;
}

// --- Chains ------------------------------------------------------------------

namespace {

// Walks the maximal same-family region rooted at `n`, collecting the signed
// subtrees hanging off it. Descending into the right child of a Sub or Div
// flips the role.
void gather_chain(const Expr& n, ChainKind kind, bool plus_role,
                  std::vector<ChainTerm>* terms, int* node_count) {
  if (n.is_leaf() || family_of(n.op()) != kind) {
    terms->push_back({plus_role, n});
    return;
  }
  ++*node_count;
  bool flips = n.op() == Op::Sub || n.op() == Op::Div;
  gather_chain(n.left(), kind, plus_role, terms, node_count);
  gather_chain(n.right(), kind, flips ? !plus_role : plus_role, terms, node_count);
}

}  // namespace

std::vector<Chain> chains(const Expr& tree) {
  std::vector<Chain> out;
  std::function<void(const Expr&)> from_top = [&](const Expr& n) {
    if (n.is_leaf()) return;
    Chain c{family_of(n.op()), n, {}, 0};
    gather_chain(n, c.kind, true, &c.terms, &c.node_count);
    std::vector<Expr> next;
    for (const ChainTerm& t : c.terms) next.push_back(t.term);
    out.push_back(std::move(c));
    for (const Expr& t : next) from_top(t);
  };
  from_top(tree);
  return out;
}

// --- Normal form -------------------------------------------------------------

namespace {

Expr comb(const std::vector<Expr>& terms, Op join) {
  Expr acc = terms.front();
  for (size_t i = 1; i < terms.size(); ++i) acc = Expr::node(join, acc, terms[i]);
  return acc;
}

Expr rebuild(const Expr& t) {
  if (t.is_leaf()) return t;
  ChainKind kind = family_of(t.op());
  std::vector<ChainTerm> terms;
  int node_count = 0;
  gather_chain(t, kind, true, &terms, &node_count);

  std::vector<Expr> plus, minus;
  for (const ChainTerm& ct : terms) {
    (ct.plus_role ? plus : minus).push_back(rebuild(ct.term));
  }
  auto by_min_leaf = [](const Expr& a, const Expr& b) {
    return a.min_leaf() < b.min_leaf();
  };
  std::sort(plus.begin(), plus.end(), by_min_leaf);
  std::sort(minus.begin(), minus.end(), by_min_leaf);

  Op join = kind == ChainKind::AddSub ? Op::Add : Op::Mul;
  Expr left = comb(plus, join);
  if (minus.empty()) return left;
  Op top = kind == ChainKind::AddSub ? Op::Sub : Op::Div;
  return Expr::node(top, left, comb(minus, join));
}

}  // namespace

Expr monotonize(const Expr& tree) { return rebuild(tree); }

Expr canonicalize(const Expr& tree) {
  if (!is_monotonic(tree)) {
    throw std::invalid_argument("canonicalize: tree is not monotone");
  }
  return rebuild(tree);
}

// --- LCA labels --------------------------------------------------------------

namespace {

LcaLabel label_at(Op op, bool qi_left) {
  switch (op) {
    case Op::Add: return LcaLabel::Plus;
    case Op::Mul: return LcaLabel::Times;
    case Op::Sub: return qi_left ? LcaLabel::Minus : LcaLabel::MinusReverse;
    case Op::Div: return qi_left ? LcaLabel::Div : LcaLabel::DivReverse;
  }
  return LcaLabel::Plus;
}

}  // namespace

LcaLabel lca_label(const Expr& tree, int qi, int qj) {
  if (qi == qj) throw std::invalid_argument("lca_label: identical quantities");
  Expr cur = tree;
  if (!cur.contains_leaf(qi)) throw MissingQuantityError("no leaf q" + std::to_string(qi));
  if (!cur.contains_leaf(qj)) throw MissingQuantityError("no leaf q" + std::to_string(qj));
  while (true) {
    Expr l = cur.left();
    bool li = l.contains_leaf(qi);
    bool lj = l.contains_leaf(qj);
    if (li && lj) {
      cur = l;
    } else if (!li && !lj) {
      cur = cur.right();
    } else {
      return label_at(cur.op(), li);
    }
  }
}

namespace {

std::vector<int> map_subtree(const Expr& t, LcaMap* out) {
  if (t.is_leaf()) return {t.leaf_index()};
  std::vector<int> l = map_subtree(t.left(), out);
  std::vector<int> r = map_subtree(t.right(), out);
  for (int a : l) {
    for (int b : r) {
      // a sits in the left subtree; orient the label by the smaller index.
      if (a < b) {
        (*out)[{a, b}] = label_at(t.op(), true);
      } else {
        (*out)[{b, a}] = label_at(t.op(), false);
      }
    }
  }
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

}  // namespace

LcaMap lca_map(const Expr& tree) {
  LcaMap out;
  map_subtree(tree, &out);
  return out;
}

bool lca_equivalent(const Expr& a, const Expr& b) {
  std::vector<int> la = a.leaf_indices(), lb = b.leaf_indices();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) {
    throw LeafSetMismatchError("lca_equivalent: trees read different leaf sets");
  }
  return lca_map(a) == lca_map(b);
}

// --- Serialization -----------------------------------------------------------

namespace {

char op_char(Op op) {
  switch (op) {
    case Op::Add: return '+';
    case Op::Sub: return '-';
    case Op::Mul: return '*';
    case Op::Div: return '/';
  }
  return '?';
}

void print_prefix(const Expr& t, std::string* out) {
  if (t.is_leaf()) {
    *out += 'q';
    *out += std::to_string(t.leaf_index());
    return;
  }
  *out += '(';
  *out += op_char(t.op());
  *out += ' ';
  print_prefix(t.left(), out);
  *out += ' ';
  print_prefix(t.right(), out);
  *out += ')';
}

struct PrefixParser {
  const std::string& text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ExprParseError(what + " at offset " + std::to_string(pos) + " in \"" + text + "\"");
  }

  Expr parse_expr() {
    skip_space();
    if (pos >= text.size()) fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      skip_space();
      if (pos >= text.size()) fail("missing operator");
      Op op;
      switch (text[pos]) {
        case '+': op = Op::Add; break;
        case '-': op = Op::Sub; break;
        case '*': op = Op::Mul; break;
        case '/': op = Op::Div; break;
        default: fail("expected one of + - * /");
      }
      ++pos;
      Expr l = parse_expr();
      Expr r = parse_expr();
      skip_space();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return Expr::node(op, l, r);
    }
    if (text[pos] == 'q') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected digits after 'q'");
      return Expr::leaf(std::stoi(text.substr(start, pos - start)));
    }
    fail("expected '(' or leaf");
  }
};

}  // namespace

std::string to_prefix(const Expr& tree) {
  std::string out;
  print_prefix(tree, &out);
  return out;
}

Expr parse_prefix(const std::string& text) {
  PrefixParser p{text};
  Expr e = p.parse_expr();
  p.skip_space();
  if (p.pos != text.size()) p.fail("trailing characters");
  return e;
}

std::string to_infix(const Expr& tree,
                     const std::function<std::string(int)>& leaf_text) {
  if (tree.is_leaf()) return leaf_text(tree.leaf_index());
  std::string l = to_infix(tree.left(), leaf_text);
  std::string r = to_infix(tree.right(), leaf_text);
  if (!tree.left().is_leaf()) l = "(" + l + ")";
  if (!tree.right().is_leaf()) r = "(" + r + ")";
  return l + " " + op_char(tree.op()) + " " + r;
}

}  // namespace monotree
