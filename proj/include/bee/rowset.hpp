/* Copyright 2026 The Bee Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bee {

/// Fixed-universe bitset over row indices [0, size).
class RowSet {
 public:
  RowSet() = default;
  explicit RowSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static RowSet full(std::size_t size) {
    RowSet s(size);
    for (std::size_t i = 0; i < size; ++i) s.set(i);
    return s;
  }
  static RowSet of(std::size_t size, const std::vector<std::size_t>& indices) {
    RowSet s(size);
    for (auto i : indices) s.set(i);
    return s;
  }

  std::size_t universe() const { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool all() const { return count() == size_; }

  bool is_subset_of(const RowSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }
  bool intersects(const RowSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & o.words_[k]) return true;
    }
    return false;
  }

  RowSet operator|(const RowSet& o) const {
    RowSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
    return r;
  }
  RowSet operator&(const RowSet& o) const {
    RowSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  RowSet complement() const {
    RowSet r(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      if (!test(i)) r.set(i);
    }
    return r;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  /// Lexicographic order of the sorted index lists.
  friend bool lex_less(const RowSet& a, const RowSet& b) { return a.indices() < b.indices(); }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

  friend bool operator==(const RowSet&, const RowSet&) = default;
  friend bool operator<(const RowSet& a, const RowSet& b) {
    return a.size_ != b.size_ ? a.size_ < b.size_ : a.words_ < b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bee

template <>
struct std::hash<bee::RowSet> {
  std::size_t operator()(const bee::RowSet& s) const noexcept { return s.hash(); }
};
