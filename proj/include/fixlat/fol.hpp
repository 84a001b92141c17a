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

#ifndef FIXLAT_FOL_HPP_
#define FIXLAT_FOL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fixlat/config.hpp"
#include "fixlat/perm_group.hpp"
#include "fixlat/point_set.hpp"

namespace fixlat {

using Tuple = std::vector<Point>;

struct Relation {
  std::size_t arity = 0;
  std::vector<Tuple> tuples;  // sorted lexicographically
};

// Orbits of a group on tuples of distinct points, one relation per orbit,
// for arities 2..max_arity. Relations of one arity are numbered by their
// least tuple. Immutable; shareable across readers.
class RelationalStructure {
 public:
  RelationalStructure(std::size_t domain_size, std::size_t max_arity,
                      std::map<std::size_t, std::vector<Relation>> relations);

  std::size_t domain_size() const { return domain_size_; }
  std::size_t max_arity() const { return max_arity_; }
  const std::map<std::size_t, std::vector<Relation>>& relations() const {
    return relations_;
  }
  const std::vector<Relation>& relations(std::size_t arity) const;

  // Forcing rule: if every point of `premises` is present, `conclusion`
  // is the unique completion of some tuple of some relation.
  struct Rule {
    std::vector<Point> premises;
    Point conclusion;
    std::size_t arity;
  };
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  std::size_t domain_size_;
  std::size_t max_arity_;
  std::map<std::size_t, std::vector<Relation>> relations_;
  std::vector<Rule> rules_;
};

// Throws CapacityError when max_arity exceeds caps.max_arity or the tuple
// space exceeds caps.tuple_count; ValidationError when max_arity < 2.
RelationalStructure canonical_structure(const PermutationGroup& g,
                                        std::size_t max_arity,
                                        const Caps& caps = default_caps());

// Least fixpoint of: add a point that is the unique completion of a tuple of
// some relation whose other coordinates are already present.
PointSet relational_dcl(const RelationalStructure& s, const PointSet& x);
// Same, using only relations of arity <= max_arity.
PointSet relational_dcl(const RelationalStructure& s, const PointSet& x,
                        std::size_t max_arity);

struct DclDisagreement {
  PointSet subset;
  PointSet dcl;
  PointSet fixset;
};

struct DclReport {
  std::size_t max_arity = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t tested = 0;
  std::size_t agreements = 0;
  // dcl(X) is a subset of the fixset closure for every tested X.
  bool sound = true;
  // Arity-capped undercoverage; not an error.
  std::vector<DclDisagreement> disagreements;
  // Smallest arity in 2..max_arity with full agreement on the tested sets.
  std::optional<std::size_t> minimal_sufficient_arity;

  double agreement_rate() const {
    return tested ? static_cast<double>(agreements) / tested : 1.0;
  }
};

// Exhaustive over all subsets for domains of at most 12 points; otherwise
// the empty set, all singletons and pairs, plus `samples` random subsets.
DclReport dcl_vs_fixset_report(const PermutationGroup& g, std::size_t max_arity,
                               std::uint64_t seed = 0,
                               std::size_t samples = 256,
                               const Caps& caps = default_caps());

}  // namespace fixlat

#endif  // FIXLAT_FOL_HPP_
