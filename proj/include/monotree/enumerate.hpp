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

#ifndef MONOTREE_ENUMERATE_HPP_
#define MONOTREE_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "monotree/expr.hpp"

namespace monotree {

struct TooManyQuantitiesError : std::runtime_error {
  explicit TooManyQuantitiesError(const std::string& what) : std::runtime_error(what) {}
};

// Visits every distinct expression tree that uses each of the given quantity
// indices exactly once: all leaf orderings, all binary shapes, all operator
// assignments. The order is deterministic: orderings ascend lexicographically
// from the sorted index list, shapes split left-size-first, and operators
// cycle Add, Sub, Mul, Div innermost. An optional filter drops trees before
// they reach the visitor. The index count is capped at 6; beyond that the
// space is unmanageable by design.
void enumerate_trees(std::vector<int> indices,
                     const std::function<void(const Expr&)>& visit,
                     const std::function<bool(const Expr&)>& filter = nullptr);

// Convenience wrapper that materializes the stream.
std::vector<Expr> all_trees(const std::vector<int>& indices);

// shapes(n) * n! * 4^(n-1), the number of trees enumerate_trees visits.
std::uint64_t count_trees(int n);

}  // namespace monotree

#endif  // MONOTREE_ENUMERATE_HPP_
