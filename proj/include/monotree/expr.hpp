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
// Binary expression trees over quantity leaves and the transformations used
// by the solver: monotone normal form, addition/subtraction and
// multiplication/division chains, and per-pair LCA operation labels.

#ifndef MONOTREE_EXPR_HPP_
#define MONOTREE_EXPR_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monotree/rational.hpp"

namespace monotree {

enum class Op { Add, Sub, Mul, Div };

// The six pairwise operation labels. For an ordered quantity pair (qi, qj)
// with qi before qj in the text, the label records both the operation at
// their lowest common ancestor and which side of it each leaf falls on.
enum class LcaLabel { Plus, Times, Minus, MinusReverse, Div, DivReverse };

// Swapping the roles of qi and qj maps a label to its mirror; Plus and Times
// are their own mirrors.
LcaLabel reverse_label(LcaLabel label);

const char* label_name(LcaLabel label);
std::optional<LcaLabel> label_from_name(const std::string& name);

struct DivByZeroError : std::runtime_error {
  DivByZeroError() : std::runtime_error("division by zero during evaluation") {}
};
struct MissingQuantityError : std::runtime_error {
  explicit MissingQuantityError(const std::string& what) : std::runtime_error(what) {}
};
struct LeafSetMismatchError : std::runtime_error {
  explicit LeafSetMismatchError(const std::string& what) : std::runtime_error(what) {}
};
struct ExprParseError : std::runtime_error {
  explicit ExprParseError(const std::string& what) : std::runtime_error(what) {}
};

// Immutable binary tree. Copies are cheap (shared nodes), and every
// transformation returns a fresh tree.
class Expr {
 public:
  static Expr leaf(int quantity_index);
  static Expr node(Op op, const Expr& left, const Expr& right);

  bool is_leaf() const { return node_->is_leaf; }
  int leaf_index() const;
  Op op() const;
  Expr left() const;
  Expr right() const;

  int leaf_count() const { return node_->leaf_count; }
  int min_leaf() const { return node_->min_leaf; }
  // Leaf indices in left-to-right order.
  std::vector<int> leaf_indices() const;
  bool contains_leaf(int quantity_index) const;

 private:
  struct Node {
    bool is_leaf;
    int leaf_index;
    Op op;
    std::shared_ptr<const Node> left, right;
    int leaf_count;
    int min_leaf;
  };

  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend bool operator==(const Expr& a, const Expr& b);
};

bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

// --- Evaluation ---------------------------------------------------------

// Exact recursive evaluation with the given leaf assignment. A leaf with no
// entry in `values` raises MissingQuantityError.
Rational evaluate(const Expr& tree, const std::map<int, Rational>& values);
// Same, but a zero divisor yields nullopt instead of throwing.
std::optional<Rational> try_evaluate(const Expr& tree,
                                     const std::map<int, Rational>& values);

// --- Structural predicates ----------------------------------------------

// True when no quantity index occurs on more than one leaf.
bool is_valid(const Expr& tree);

// True when the tree is in monotone form: Sub is never a child of Add, Div
// is never a child of Mul, and no Sub-Sub or Div-Div edge exists.
bool is_monotonic(const Expr& tree);

// --- Chains --------------------------------------------------------------

enum class ChainKind { AddSub, MulDiv };

ChainKind family_of(Op op);

// One term hanging off a chain. plus_role means added (or multiplied); the
// complement means subtracted (or divided by).
struct ChainTerm {
  bool plus_role;
  Expr term;
};

// A maximal connected set of same-family internal nodes, together with the
// signed subtrees hanging off it. Every internal node of a tree belongs to
// exactly one chain.
struct Chain {
  ChainKind kind;
  Expr top;  // the chain node closest to the root
  std::vector<ChainTerm> terms;
  int node_count;
};

// Chains in pre-order of their top nodes; terms in left-to-right order.
std::vector<Chain> chains(const Expr& tree);

// --- Normal form ---------------------------------------------------------

// Rewrites a valid tree into the equivalent monotone form: every chain is
// rebuilt with its plus-role terms under a left-leaning Add (or Mul) comb on
// the left and its minus-role terms likewise on the right, joined by a single
// Sub (or Div). A chain with no minus-role terms becomes just the comb.
// Terms within a comb are ordered by ascending minimum leaf index, so the
// output is canonical and the value is preserved on every assignment.
Expr monotonize(const Expr& tree);

// Sorts comb terms of an already monotone tree into the canonical order.
// Throws std::invalid_argument when the input is not monotone.
Expr canonicalize(const Expr& tree);

// --- LCA labels ----------------------------------------------------------

using LcaMap = std::map<std::pair<int, int>, LcaLabel>;

// Label of the lowest common ancestor of the leaves qi and qj, oriented by
// which side of that node each leaf falls on. Both leaves must be present.
LcaLabel lca_label(const Expr& tree, int qi, int qj);

// Labels for every unordered leaf pair, keyed (min, max) by quantity index.
LcaMap lca_map(const Expr& tree);

// True when both trees induce identical labels on every pair. Raises
// LeafSetMismatchError when the trees read different leaf sets.
bool lca_equivalent(const Expr& a, const Expr& b);

// --- Serialization -------------------------------------------------------

// Prefix notation, e.g. "(* (+ q0 q1) q2)". Printing then parsing (and the
// converse) is an exact round trip.
std::string to_prefix(const Expr& tree);
Expr parse_prefix(const std::string& text);

// Infix rendering with a caller-supplied leaf formatter, e.g. "(3 + 5) * 9".
std::string to_infix(const Expr& tree,
                     const std::function<std::string(int)>& leaf_text);

}  // namespace monotree

#endif  // MONOTREE_EXPR_HPP_
