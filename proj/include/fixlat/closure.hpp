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

#ifndef FIXLAT_CLOSURE_HPP_
#define FIXLAT_CLOSURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixlat/config.hpp"
#include "fixlat/perm_group.hpp"
#include "fixlat/point_set.hpp"
#include "fixlat/set_lattice.hpp"

namespace fixlat {

// A closed subset of the domain, tagged with the action it is closed under.
struct FixSet {
  PointSet points;
  std::uint64_t group_id = 0;

  friend bool operator==(const FixSet&, const FixSet&) = default;
};

using FixsetLattice = SetLattice;

// Points fixed by every generator (hence by the whole group).
PointSet fixed_points(const PermutationGroup& h);

// fix(G_delta): the points fixed by the pointwise stabilizer of delta.
FixSet fixset_closure(const PermutationGroup& g, const PointSet& delta);

bool is_fixset(const PermutationGroup& g, const PointSet& delta);

// Meet is intersection; join is the closure of the union. Both arguments must
// be fixsets of g (PreconditionError otherwise).
FixSet fix_meet(const PermutationGroup& g, const FixSet& a, const FixSet& b);
FixSet fix_join(const PermutationGroup& g, const FixSet& a, const FixSet& b);

// Memoizing closure operator for one group. Not thread-safe.
class ClosureOperator {
 public:
  explicit ClosureOperator(const PermutationGroup& g) : group_(&g) {}
  const PointSet& operator()(const PointSet& delta);
  std::size_t evaluations() const { return evaluations_; }

 private:
  const PermutationGroup* group_;
  std::unordered_map<PointSet, PointSet, PointSetHash> cache_;
  std::size_t evaluations_ = 0;
};

// Every fixset of g: the bottom fix(G), the singleton closures, saturated
// under pairwise join, plus the full domain.
FixsetLattice enumerate_fixset_lattice(const PermutationGroup& g,
                                       const Caps& caps = default_caps());

struct GaloisReport {
  bool pass = true;
  std::size_t fixsets = 0;
  std::size_t pairs_checked = 0;
  std::string failure;  // empty on pass
  std::optional<std::pair<PointSet, PointSet>> witness;
};

// Exhaustive pairwise check of meet = intersection, join = closure of union
// (as least upper bound), and the order-reversing bijection between fixsets
// and their pointwise stabilizers.
GaloisReport galois_report(const PermutationGroup& g,
                           const FixsetLattice& lattice);
GaloisReport galois_report(const PermutationGroup& g,
                           const Caps& caps = default_caps());

}  // namespace fixlat

#endif  // FIXLAT_CLOSURE_HPP_
