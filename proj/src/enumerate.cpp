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

#include "monotree/enumerate.hpp"

#include <algorithm>

namespace monotree {

namespace {

constexpr int kMaxLeaves = 6;
constexpr Op kOps[] = {Op::Add, Op::Sub, Op::Mul, Op::Div};

// All trees over the exact leaf sequence seq[lo, hi).
std::vector<Expr> trees_over(const std::vector<int>& seq, int lo, int hi) {
  if (hi - lo == 1) return {Expr::leaf(seq[lo])};
  std::vector<Expr> out;
  for (int split = lo + 1; split < hi; ++split) {
    std::vector<Expr> lefts = trees_over(seq, lo, split);
    std::vector<Expr> rights = trees_over(seq, split, hi);
    for (const Expr& l : lefts) {
      for (const Expr& r : rights) {
        for (Op op : kOps) out.push_back(Expr::node(op, l, r));
      }
    }
  }
  return out;
}

}  // namespace

void enumerate_trees(std::vector<int> indices,
                     const std::function<void(const Expr&)>& visit,
                     const std::function<bool(const Expr&)>& filter) {
  if (indices.empty()) throw std::invalid_argument("enumerate_trees: no indices");
  if (static_cast<int>(indices.size()) > kMaxLeaves) {
    throw TooManyQuantitiesError("enumerate_trees: more than " +
                                 std::to_string(kMaxLeaves) + " indices");
  }
  std::sort(indices.begin(), indices.end());
  do {
    for (const Expr& t : trees_over(indices, 0, static_cast<int>(indices.size()))) {
      if (filter && !filter(t)) continue;
      visit(t);
    }
  } while (std::next_permutation(indices.begin(), indices.end()));
}

std::vector<Expr> all_trees(const std::vector<int>& indices) {
  std::vector<Expr> out;
  enumerate_trees(indices, [&](const Expr& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_trees(int n) {
  // Catalan(n-1) shapes.
  std::uint64_t catalan = 1;
  for (int i = 1; i < n; ++i) catalan = catalan * 2 * (2 * i - 1) / (i + 1);
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::uint64_t ops = 1;
  for (int i = 1; i < n; ++i) ops *= 4;
  return catalan * fact * ops;
}

}  // namespace monotree
