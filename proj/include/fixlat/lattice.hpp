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

#ifndef FIXLAT_LATTICE_HPP_
#define FIXLAT_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fixlat/closure.hpp"
#include "fixlat/config.hpp"
#include "fixlat/perm_group.hpp"
#include "fixlat/point_set.hpp"

namespace fixlat {

using Element = std::size_t;

struct LatticeViolation {
  enum class Kind {
    kEmpty,
    kNotReflexive,
    kNotAntisymmetric,
    kNotTransitive,
    kNoMeet,
    kNoJoin,
  };
  Kind kind;
  Element a = 0;
  Element b = 0;

  std::string describe() const;
  friend bool operator==(const LatticeViolation&,
                         const LatticeViolation&) = default;
};

struct LatticeValidation;

LatticeValidation lattice_validate(std::size_t size,
                                   const std::vector<std::vector<bool>>& leq,
                                   std::vector<std::string> labels = {});

// Explicit finite lattice: elements 0..size-1 with a validated order.
// Meet and join tables are precomputed at construction.
class FiniteLattice {
 public:
  static constexpr std::size_t kMaxSize = 4096;

  // Throws ValidationError (message lists the first violations).
  static FiniteLattice from_leq(std::vector<std::vector<bool>> leq,
                                std::vector<std::string> labels = {});
  // Order is the reflexive-transitive closure of the cover pairs (lo, hi).
  static FiniteLattice from_covers(
      std::size_t size, std::span<const std::pair<Element, Element>> covers,
      std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  bool leq(Element a, Element b) const { return below_[b].contains(
      static_cast<Point>(a)); }
  Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
  Element join(Element a, Element b) const { return join_[a * size_ + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  // Lower cone {x | x <= l} and upper cone {x | l <= x} as element sets.
  const PointSet& below(Element l) const { return below_[l]; }
  const PointSet& above(Element l) const { return above_[l]; }

  // Length of the longest chain from bottom.
  std::size_t rank(Element l) const { return rank_[l]; }
  const std::vector<Element>& upper_covers(Element l) const {
    return upper_covers_[l];
  }
  const std::vector<Element>& lower_covers(Element l) const {
    return lower_covers_[l];
  }
  std::vector<std::pair<Element, Element>> covers() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element l) const;

 private:
  FiniteLattice() = default;
  friend LatticeValidation lattice_validate(
      std::size_t, const std::vector<std::vector<bool>>&,
      std::vector<std::string>);

  std::size_t size_ = 0;
  std::vector<PointSet> below_;
  std::vector<PointSet> above_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<std::vector<Element>> lower_covers_;
  std::vector<std::string> labels_;
  Element bottom_ = 0;
  Element top_ = 0;
};

struct LatticeValidation {
  std::optional<FiniteLattice> lattice;
  std::vector<LatticeViolation> violations;
  bool valid() const { return lattice.has_value(); }
};

// S must be non-empty (PreconditionError otherwise).
Element meet(const FiniteLattice& l, std::span<const Element> s);
Element join(const FiniteLattice& l, std::span<const Element> s);

std::vector<Element> atoms(const FiniteLattice& l);
bool is_atomistic(const FiniteLattice& l);
std::vector<Element> lower_cone(const FiniteLattice& l, Element x);
// a(l): indices (into atoms(l)) of the atoms below x.
PointSet atoms_below(const FiniteLattice& l, Element x);

// Order automorphisms as a permutation group on element indices. Atomistic
// lattices are searched on the atom layer and lifted; others element-wise,
// level by level. Throws CapacityError past caps.lattice_automorphism_size.
PermutationGroup lattice_automorphisms(const FiniteLattice& l,
                                       const Caps& caps = default_caps());

struct ConditionS {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
};

// Distinct elements must have distinct lower-cone pointwise stabilizers in
// the automorphism action. Subgroups are compared by mutual membership.
ConditionS condition_S(const FiniteLattice& l, const PermutationGroup& aut);
ConditionS condition_S(const FiniteLattice& l,
                       const Caps& caps = default_caps());

struct ReconstructionResult {
  GroupAction atom_action;
  std::vector<Element> atom_elements;  // atom index -> lattice element
  FixsetLattice fixset_lattice;
  std::vector<std::size_t> rho;        // element -> fixset index
  std::vector<std::size_t> rho_image;  // sorted distinct fixset indices
  std::vector<std::size_t> cl;         // fixset index -> fixset index
  bool rho_injective = false;
  bool rho_order_embedding = false;
  bool cl_trivial = false;
  // Element -> fixset index, present exactly when cl is trivial.
  std::optional<std::vector<std::size_t>> iso;
};

// Rejects non-atomistic lattices and lattices failing condition (S) with a
// PreconditionError naming the failed check.
ReconstructionResult reconstruct(const FiniteLattice& l,
                                 const Caps& caps = default_caps());

bool is_distributive(const FiniteLattice& l);
bool is_complemented(const FiniteLattice& l);

struct StoneRepresentation {
  std::vector<PointSet> ultrafilters;  // element sets
  std::vector<PointSet> u_map;         // element -> ultrafilter indices
  bool injective = false;
};

// Finite distributive complemented lattices only.
StoneRepresentation stone_ultrafilters(const FiniteLattice& l);

// Small named lattices.
FiniteLattice chain_lattice(std::size_t n);
// Bottom 0, atoms 1..n, top n+1.
FiniteLattice m_lattice(std::size_t n);
// Subsets of an n-set; element i is the bitmask i.
FiniteLattice boolean_lattice(std::size_t n);

}  // namespace fixlat

#endif  // FIXLAT_LATTICE_HPP_
