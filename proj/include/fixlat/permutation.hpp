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

#ifndef FIXLAT_PERMUTATION_HPP_
#define FIXLAT_PERMUTATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fixlat/point_set.hpp"

namespace fixlat {

// Bijection of {0, ..., n-1}, stored as its image list.
//
// Products act on the right: (p * q)(x) = q(p(x)), i.e. apply p first.
// This matches the x^(pq) = (x^p)^q convention of the stabilizer-chain code.
class Permutation {
 public:
  Permutation() = default;
  // Throws ValidationError unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool fixes(Point x) const { return images_[x] == x; }
  bool fixes_pointwise(const PointSet& s) const;
  // Smallest moved point, or degree() if identity.
  Point first_moved() const;

  PointSet image(const PointSet& s) const;

  std::string to_cycles() const;
  std::size_t hash() const;

  friend Permutation operator*(const Permutation& first,
                               const Permutation& second);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked)
      : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace fixlat

#endif  // FIXLAT_PERMUTATION_HPP_
