// Copyright 2026 The Authors.
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "cyclemap/edge_set.hpp"
#include "cyclemap/error.hpp"

namespace cyclemap {

// Subspace of GF(2)^ground held as a reduced row-echelon basis: every pivot
// column is set in exactly one row.
class Gf2Space {
 public:
  Gf2Space() = default;
  Gf2Space(std::size_t ground_size, std::uint64_t tag) : ground_size_(ground_size), tag_(tag) {}

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::uint64_t tag() const noexcept { return tag_; }
  int dimension() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<EdgeSet>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Canonical representative of x + (this space).
  EdgeSet reduce(EdgeSet x) const {
    check(x);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (x.test(pivots_[i])) x ^= rows_[i];
    }
    return x;
  }

  bool contains(const EdgeSet& x) const { return reduce(x).empty(); }

  // Adds x to the space; returns false when x was already in it.
  bool insert(const EdgeSet& x) {
    EdgeSet r = reduce(x);
    if (r.empty()) return false;
    const std::size_t pivot = r.first();
    for (auto& row : rows_) {
      if (row.test(pivot)) row ^= r;
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, r);
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
  }

  // Visits all 2^dim elements, zero first, in Gray-code order.
  template <typename Fn>
  void for_each_element(Fn&& fn) const {
    EdgeSet x(ground_size_, tag_);
    fn(x);
    const std::uint64_t total = std::uint64_t{1} << rows_.size();
    for (std::uint64_t i = 1; i < total; ++i) {
      x ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
      fn(x);
    }
  }

 private:
  void check(const EdgeSet& x) const {
    if (x.tag() != tag_ || x.ground_size() != ground_size_) {
      throw Error(ErrorCode::kGroundMismatch, "vector outside the space's ground set");
    }
  }

  std::size_t ground_size_ = 0;
  std::uint64_t tag_ = 0;
  std::vector<EdgeSet> rows_;
  std::vector<std::size_t> pivots_;
};

inline Gf2Space span(std::size_t ground_size, std::uint64_t tag, const std::vector<EdgeSet>& family) {
  Gf2Space space(ground_size, tag);
  for (const auto& x : family) space.insert(x);
  return space;
}

// Span of a nonempty family; the ground is taken from its members.
inline Gf2Space span(const std::vector<EdgeSet>& family) {
  if (family.empty()) return Gf2Space();
  return span(family.front().ground_size(), family.front().tag(), family);
}

}  // namespace cyclemap
