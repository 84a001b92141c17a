// Copyright 2026 The fixlat Authors
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

#ifndef FIXLAT_POINT_SET_HPP_
#define FIXLAT_POINT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fixlat {

using Point = std::uint32_t;

// Subset of the domain {0, ..., universe-1} stored as a bit vector.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  PointSet(std::size_t universe, std::initializer_list<Point> points)
      : PointSet(universe) {
    for (Point p : points) insert(p);
  }
  PointSet(std::size_t universe, std::span<const Point> points)
      : PointSet(universe) {
    for (Point p : points) insert(p);
  }

  static PointSet full(std::size_t universe) {
    PointSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Point>(i));
    return s;
  }
  // Bit i of `mask` becomes point i; universe must be <= 64.
  static PointSet from_mask(std::size_t universe, std::uint64_t mask) {
    PointSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool contains(Point p) const {
    return p < universe_ && ((words_[p >> 6] >> (p & 63)) & 1u);
  }
  void insert(Point p) { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  void erase(Point p) { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return size() == universe_; }

  bool is_subset_of(const PointSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  PointSet& operator&=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  PointSet& operator|=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  PointSet complement() const { return full(universe_) - *this; }

  // Smallest member, or universe() when empty.
  Point first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return static_cast<Point>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<Point>(universe_);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Point>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Point> to_vector() const {
    std::vector<Point> out;
    out.reserve(size());
    for_each([&](Point p) { out.push_back(p); });
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](Point p) {
      if (!first_item) s += ",";
      s += std::to_string(p);
      first_item = false;
    });
    return s + "}";
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

  // Order used for lattice element numbering: by size, then lexicographic
  // on the sorted point lists.
  friend bool size_lex_less(const PointSet& a, const PointSet& b) {
    const auto na = a.size(), nb = b.size();
    if (na != nb) return na < nb;
    return a.to_vector() < b.to_vector();
  }

 private:
  void trim() {
    if (universe_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace fixlat

#endif  // FIXLAT_POINT_SET_HPP_
