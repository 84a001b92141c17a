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

#include "fixlat/permutation.hpp"

#include <cctype>
#include <charconv>

#include "fixlat/error.hpp"

namespace fixlat {

Permutation::Permutation(std::vector<Point> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Point y = images_[i];
    if (y >= images_.size())
      throw ValidationError("permutation image " + std::to_string(y) +
                            " out of range for degree " +
                            std::to_string(images_.size()));
    if (seen[y])
      throw ValidationError("permutation is not a bijection: image " +
                            std::to_string(y) + " repeated");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::string_view cycles) {
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < cycles.size() &&
           std::isspace(static_cast<unsigned char>(cycles[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < cycles.size()) {
    if (cycles[pos] != '(')
      throw ValidationError("cycle notation: expected '(' at position " +
                            std::to_string(pos));
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos < cycles.size() && cycles[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < cycles.size() && cycles[pos] == ')') {
        ++pos;
        break;
      }
      Point v = 0;
      auto [ptr, ec] = std::from_chars(cycles.data() + pos,
                                       cycles.data() + cycles.size(), v);
      if (ec != std::errc())
        throw ValidationError("cycle notation: bad point at position " +
                              std::to_string(pos));
      pos = static_cast<std::size_t>(ptr - cycles.data());
      if (v >= degree)
        throw ValidationError("cycle notation: point " + std::to_string(v) +
                              " out of range for degree " +
                              std::to_string(degree));
      if (used[v])
        throw ValidationError("cycle notation: point " + std::to_string(v) +
                              " appears twice");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::fixes_pointwise(const PointSet& s) const {
  bool ok = true;
  s.for_each([&](Point p) { ok = ok && images_[p] == p; });
  return ok;
}

Point Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

PointSet Permutation::image(const PointSet& s) const {
  PointSet out(s.universe());
  s.for_each([&](Point p) { out.insert(images_[p]); });
  return out;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::size_t Permutation::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point p : images_) h = (h ^ p) * 0x100000001b3ULL;
  return h;
}

Permutation operator*(const Permutation& first, const Permutation& second) {
  if (first.degree() != second.degree())
    throw ValidationError("permutation product: degree mismatch");
  std::vector<Point> img(first.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = second.images_[first.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

}  // namespace fixlat
