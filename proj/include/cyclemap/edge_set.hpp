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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cyclemap/error.hpp"

namespace cyclemap {

// Fixed-capacity bitset over a ground set of at most kMaxGround elements. The
// tag names the ground set; binary operations refuse mismatched tags so that
// subsets of different graphs or matroids are never combined by accident.
class EdgeSet {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kMaxGround = 64 * kWords;

  EdgeSet() = default;
  EdgeSet(std::size_t ground_size, std::uint64_t tag) : size_(ground_size), tag_(tag) {
    if (ground_size > kMaxGround) {
      throw Error(ErrorCode::kGroundTooLarge,
                  "ground of size " + std::to_string(ground_size) + " exceeds " +
                      std::to_string(kMaxGround));
    }
  }

  static EdgeSet from_indices(std::size_t ground_size, std::uint64_t tag,
                              const std::vector<int>& indices) {
    EdgeSet s(ground_size, tag);
    for (int i : indices) s.set(static_cast<std::size_t>(i));
    return s;
  }

  // Low 64 bits as the set; only valid for grounds of at most 64 elements.
  static EdgeSet from_mask(std::size_t ground_size, std::uint64_t tag, std::uint64_t mask) {
    EdgeSet s(ground_size, tag);
    s.words_[0] = mask;
    return s;
  }

  static EdgeSet full(std::size_t ground_size, std::uint64_t tag) {
    EdgeSet s(ground_size, tag);
    for (std::size_t i = 0; i < ground_size; ++i) s.set(i);
    return s;
  }

  std::size_t ground_size() const noexcept { return size_; }
  std::uint64_t tag() const noexcept { return tag_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) {
    if (i >= size_) {
      throw Error(ErrorCode::kBadParams,
                  "element " + std::to_string(i) + " outside ground of size " +
                      std::to_string(size_));
    }
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const noexcept { return !empty(); }

  std::uint64_t low_mask() const noexcept { return words_[0]; }
  const std::array<std::uint64_t, kWords>& words() const noexcept { return words_; }

  // Index of the lowest element, or ground_size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < kWords; ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  bool is_subset_of(const EdgeSet& other) const {
    check_same_ground(other);
    for (std::size_t w = 0; w < kWords; ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }
  bool is_proper_subset_of(const EdgeSet& other) const {
    return is_subset_of(other) && words_ != other.words_;
  }
  bool intersects(const EdgeSet& other) const {
    check_same_ground(other);
    for (std::size_t w = 0; w < kWords; ++w) {
      if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
  }

  EdgeSet& operator^=(const EdgeSet& o) { return combine(o, [](auto a, auto b) { return a ^ b; }); }
  EdgeSet& operator&=(const EdgeSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  EdgeSet& operator|=(const EdgeSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  EdgeSet& operator-=(const EdgeSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  EdgeSet complement() const {
    EdgeSet out = full(size_, tag_);
    for (std::size_t w = 0; w < kWords; ++w) out.words_[w] &= ~words_[w];
    return out;
  }

  // Same elements, different ground tag. Used when two graphs share an edge
  // indexing by construction (e.g. a certificate between 2-isomorphic graphs).
  EdgeSet retagged(std::uint64_t tag) const {
    EdgeSet out = *this;
    out.tag_ = tag;
    return out;
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) noexcept {
    return a.size_ == b.size_ && a.tag_ == b.tag_ && a.words_ == b.words_;
  }

  // Canonical order: lexicographic on the ascending index lists.
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) noexcept {
    if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      // The set owning the lowest differing element is smaller unless the
      // other one has nothing beyond that element (it is then a prefix).
      const EdgeSet& owner = (a.words_[w] & low) ? a : b;
      const EdgeSet& other = (a.words_[w] & low) ? b : a;
      bool other_has_more = (other.words_[w] & ~(low | (low - 1))) != 0;
      for (std::size_t v = w + 1; v < kWords && !other_has_more; ++v) {
        other_has_more = other.words_[v] != 0;
      }
      return (&owner == &a) == other_has_more;
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ tag_;
    for (auto w : words_) h = (h ^ w) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }

 private:
  void check_same_ground(const EdgeSet& o) const {
    if (o.tag_ != tag_ || o.size_ != size_) {
      throw Error(ErrorCode::kGroundMismatch, "edge sets over different ground sets");
    }
  }
  template <typename Op>
  EdgeSet& combine(const EdgeSet& o, Op op) {
    check_same_ground(o);
    for (std::size_t w = 0; w < kWords; ++w) words_[w] = op(words_[w], o.words_[w]);
    return *this;
  }

  std::size_t size_ = 0;
  std::uint64_t tag_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept { return s.hash(); }
};

// Named ground set of a matroid or graph. The tag is derived from the names
// unless supplied (graphs derive it from their structure).
struct Ground {
  std::vector<std::string> names;
  std::uint64_t tag = 0;

  std::size_t size() const noexcept { return names.size(); }
  EdgeSet empty_set() const { return EdgeSet(names.size(), tag); }
  EdgeSet full_set() const { return EdgeSet::full(names.size(), tag); }

  static Ground from_names(std::vector<std::string> names) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& n : names) {
      for (unsigned char c : n) h = (h ^ c) * 1099511628211ULL;
      h = (h ^ 0xffU) * 1099511628211ULL;
    }
    return Ground{std::move(names), h};
  }
};

inline EdgeSet mod2_add(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

}  // namespace cyclemap
