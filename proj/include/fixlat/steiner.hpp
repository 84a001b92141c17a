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

#ifndef FIXLAT_STEINER_HPP_
#define FIXLAT_STEINER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fixlat/config.hpp"
#include "fixlat/perm_group.hpp"
#include "fixlat/point_set.hpp"

namespace fixlat {

// Points 0..num_points-1 and blocks such that every k-subset of points lies
// in exactly one block. Blocks are kept sorted, and the list sorted.
struct SteinerSystem {
  std::size_t k = 2;
  std::size_t num_points = 0;
  std::vector<std::vector<Point>> blocks;

  std::size_t block_size() const {
    return blocks.empty() ? 0 : blocks.front().size();
  }
  void normalize();
  friend bool operator==(const SteinerSystem&, const SteinerSystem&) = default;
};

struct SteinerViolation {
  enum class Kind {
    kPointOutOfRange,
    kRepeatedPoint,
    kUnequalBlockSize,
    kDegenerate,
    kUncovered,
    kMultiplyCovered,
  };
  Kind kind;
  std::vector<Point> subset;  // offending block or k-subset
  std::size_t count = 0;      // blocks containing `subset` when relevant

  std::string describe() const;
};

struct SteinerVerification {
  bool valid = true;
  std::vector<SteinerViolation> violations;
};

// Exhaustive exactly-one-block check over every k-subset.
SteinerVerification verify_steiner(const SteinerSystem& sys,
                                   const Caps& caps = default_caps());

// b * C(block_size, k) == C(num_points, k).
bool satisfies_counting_identity(const SteinerSystem& sys);

// Points and lines of PG(d, q) in the canonical point numbering.
SteinerSystem steiner_from_projective(std::uint32_t q, std::size_t d);
// Points and lines of AG(d, q); point index is the base-q value of the
// coordinates, coordinate 0 most significant.
SteinerSystem steiner_from_affine(std::uint32_t q, std::size_t d);
// The affine planes of AG(d, 2): a Steiner 3-system with blocks of size 4.
SteinerSystem steiner_from_affine_planes(std::size_t d);

// Blocks through p with p removed, on the remaining points renumbered in
// order. Requires k >= 3.
SteinerSystem derivation(const SteinerSystem& sys, Point p);

// Point bijection a -> b mapping blocks onto blocks, if one exists.
std::optional<std::vector<Point>> steiner_isomorphism(
    const SteinerSystem& a, const SteinerSystem& b,
    const Caps& caps = default_caps());

struct JordanEntry {
  PointSet fixset;
  std::vector<std::vector<Point>> complement_orbits;
  bool jordan = false;
  std::size_t complement_orbit_count() const {
    return complement_orbits.size();
  }
};

struct JordanReport {
  // One entry per fixset other than the empty set and the full domain.
  std::vector<JordanEntry> entries;
  bool condition_T = true;
  std::size_t transitivity_degree = 0;
  // Index into `entries` of the first non-Jordan fixset.
  std::optional<std::size_t> first_failure;
};

JordanReport jordan_report(const PermutationGroup& g, std::size_t k_max = 5,
                           const Caps& caps = default_caps());

struct AutomorphismCheck {
  bool preserves_blocks = true;
  std::optional<std::size_t> generator;
  std::optional<std::vector<Point>> block;
};

// Whether every generator maps blocks to blocks.
AutomorphismCheck steiner_automorphism_check(const SteinerSystem& sys,
                                             const PermutationGroup& g);

struct BlockStabilization {
  bool pointwise = true;
  std::optional<std::vector<Point>> block;
  std::optional<std::vector<Point>> subset;
};

// Does fixing k points of a block in g fix the whole block pointwise?
BlockStabilization block_pointwise_stabilization(const SteinerSystem& sys,
                                                 const PermutationGroup& g);

}  // namespace fixlat

#endif  // FIXLAT_STEINER_HPP_
