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

#ifndef FIXLAT_PERM_GROUP_HPP_
#define FIXLAT_PERM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fixlat/config.hpp"
#include "fixlat/permutation.hpp"
#include "fixlat/point_set.hpp"

namespace fixlat {

using BigInt = boost::multiprecision::cpp_int;

// Base and strong generating set built by deterministic Schreier-Sims.
//
// The base starts with the requested prefix (in the given order, duplicates
// dropped); further base points are the smallest points moved by the residue
// that forced a new level. Prefix points are kept as levels even when their
// basic orbit is trivial, so `stabilizer_generators(k)` generates the
// pointwise stabilizer of the first k prefix points.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    // Strong generators fixing every earlier base point.
    std::vector<Permutation> generators;
    // orbit_index[x] is the position of x in `orbit`, or -1.
    std::vector<std::int32_t> orbit_index;
    std::vector<Point> orbit;
    // transversal[i] maps `base` to orbit[i].
    std::vector<Permutation> transversal;
  };

  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;
  BigInt order() const;
  bool contains(const Permutation& p) const;
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const;
  // Chain of the stabilizer of the first `depth` base points.
  StabilizerChain tail(std::size_t depth) const;

 private:
  StabilizerChain() = default;
  void rebuild_orbit(std::size_t level);
  // Sifts g through levels [from, end); returns the residue and the level at
  // which sifting stopped (levels_.size() if it went all the way through).
  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

struct Primitivity {
  bool primitive = true;
  // Set when imprimitive: the minimal block system with the smallest block
  // size, ties broken lexicographically. Blocks sorted, list sorted.
  std::optional<std::vector<std::vector<Point>>> block_system;
};

// Finite permutation group on {0, ..., degree-1}. Immutable once built.
class PermutationGroup {
 public:
  // Validates generators and builds the stabilizer chain eagerly.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   const Caps& caps = default_caps());

  static PermutationGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabilizerChain& chain() const { return *chain_; }

  BigInt order() const { return chain_->order(); }
  // Throws ValidationError on degree mismatch.
  bool contains(const Permutation& p) const;

  PointSet orbit(Point x) const;
  // Sorted orbits, listed by least element.
  std::vector<std::vector<Point>> orbits() const;
  // Orbits of the group restricted to the invariant set `within`.
  std::vector<std::vector<Point>> orbits_on(const PointSet& within) const;
  bool is_transitive() const;

  PermutationGroup pointwise_stabilizer(const PointSet& points) const;

  // Generator-wise membership; never compares generator lists.
  bool is_subgroup_of(const PermutationGroup& other) const;
  bool same_group_as(const PermutationGroup& other) const;

  // Largest k <= k_max with a single orbit on distinct k-tuples; 0 when
  // intransitive. Never exceeds the degree.
  std::size_t transitivity_degree(std::size_t k_max) const;

  // Throws PreconditionError for intransitive groups.
  Primitivity primitivity() const;

  // Identity of the action used to tag fixsets.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::shared_ptr<const StabilizerChain> chain);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
  std::uint64_t fingerprint_ = 0;
};

// Free-function spellings of the core operations.
inline PermutationGroup group_from_generators(
    std::size_t degree, std::vector<Permutation> generators) {
  return PermutationGroup(degree, std::move(generators));
}
inline BigInt group_order(const PermutationGroup& g) { return g.order(); }

// A group with optional point names.
struct GroupAction {
  PermutationGroup group;
  std::vector<std::string> labels;

  GroupAction(PermutationGroup g, std::vector<std::string> point_labels = {});
};

// Standard families, used by tests, examples and the CLI.
PermutationGroup symmetric_group(std::size_t n);
PermutationGroup alternating_group(std::size_t n);
PermutationGroup cyclic_group(std::size_t n);
// Symmetries of the regular n-gon on vertices 0..n-1 (order 2n).
PermutationGroup dihedral_group(std::size_t n);

}  // namespace fixlat

#endif  // FIXLAT_PERM_GROUP_HPP_
