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

#include "fixlat/closure.hpp"

#include "fixlat/error.hpp"

namespace fixlat {

namespace {

void check_universe(const PermutationGroup& g, const PointSet& s) {
  if (s.universe() != g.degree())
    throw ValidationError("point-set universe " + std::to_string(s.universe()) +
                          " != group degree " + std::to_string(g.degree()));
}

}  // namespace

PointSet fixed_points(const PermutationGroup& h) {
  PointSet out = PointSet::full(h.degree());
  for (const auto& g : h.generators())
    for (Point x = 0; x < h.degree(); ++x)
      if (!g.fixes(x)) out.erase(x);
  return out;
}

FixSet fixset_closure(const PermutationGroup& g, const PointSet& delta) {
  check_universe(g, delta);
  return {fixed_points(g.pointwise_stabilizer(delta)), g.fingerprint()};
}

bool is_fixset(const PermutationGroup& g, const PointSet& delta) {
  return fixset_closure(g, delta).points == delta;
}

namespace {

void require_fixset(const PermutationGroup& g, const FixSet& s,
                    const char* which) {
  if (s.group_id != g.fingerprint())
    throw PreconditionError(std::string(which) +
                            " argument belongs to a different action");
  if (!is_fixset(g, s.points))
    throw PreconditionError(std::string(which) + " argument " +
                            s.points.to_string() + " is not a fixset");
}

}  // namespace

FixSet fix_meet(const PermutationGroup& g, const FixSet& a, const FixSet& b) {
  require_fixset(g, a, "first");
  require_fixset(g, b, "second");
  FixSet m{a.points & b.points, g.fingerprint()};
  if (!is_fixset(g, m.points))
    throw InternalError("intersection of fixsets " + a.points.to_string() +
                        " and " + b.points.to_string() + " is not closed");
  return m;
}

FixSet fix_join(const PermutationGroup& g, const FixSet& a, const FixSet& b) {
  require_fixset(g, a, "first");
  require_fixset(g, b, "second");
  return fixset_closure(g, a.points | b.points);
}

const PointSet& ClosureOperator::operator()(const PointSet& delta) {
  auto it = cache_.find(delta);
  if (it != cache_.end()) return it->second;
  ++evaluations_;
  PointSet closed = fixset_closure(*group_, delta).points;
  // A closed set is its own closure; remember that too.
  cache_.emplace(closed, closed);
  return cache_.emplace(delta, std::move(closed)).first->second;
}

FixsetLattice enumerate_fixset_lattice(const PermutationGroup& g,
                                       const Caps& caps) {
  const std::size_t n = g.degree();
  ClosureOperator close(g);
  std::vector<PointSet> seeds;
  seeds.push_back(close(PointSet(n)));
  for (Point a = 0; a < n; ++a) seeds.push_back(close(PointSet(n, {a})));
  auto elements = saturate_under_join(
      std::move(seeds), [&](const PointSet& u) { return close(u); },
      caps.lattice_size);
  elements.push_back(PointSet::full(n));
  return FixsetLattice(n, std::move(elements));
}

GaloisReport galois_report(const PermutationGroup& g,
                           const FixsetLattice& lattice) {
  GaloisReport report;
  report.fixsets = lattice.size();
  const std::size_t n = g.degree();
  ClosureOperator close(g);
  auto fail = [&](std::string why, const PointSet& a, const PointSet& b) {
    report.pass = false;
    report.failure = std::move(why);
    report.witness = std::make_pair(a, b);
    return report;
  };

  const PointSet empty(n);
  const PointSet full = PointSet::full(n);
  if (!lattice.contains(close(empty)))
    return fail("bottom fix(G) missing", close(empty), empty);
  for (Point a = 0; a < n; ++a) {
    const PointSet single(n, {a});
    if (!lattice.contains(close(single)))
      return fail("closure of singleton missing", close(single), single);
  }
  if (!lattice.contains(full)) return fail("top missing", full, full);

  std::vector<PermutationGroup> stab;
  stab.reserve(lattice.size());
  for (const auto& e : lattice.elements()) {
    if (close(e) != e) return fail("element is not closed", e, close(e));
    stab.push_back(g.pointwise_stabilizer(e));
    if (fixed_points(stab.back()) != e)
      return fail("fix(G_delta) != delta", e, fixed_points(stab.back()));
  }

  const auto& els = lattice.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      ++report.pairs_checked;
      const PointSet meet = els[i] & els[j];
      if (!lattice.contains(meet))
        return fail("intersection is not a lattice element", els[i], els[j]);
      const PointSet join = close(els[i] | els[j]);
      if (!lattice.contains(join))
        return fail("closure of union is not a lattice element", els[i],
                    els[j]);
      if (!(els[i] | els[j]).is_subset_of(join))
        return fail("join does not contain the union", els[i], els[j]);
      for (const auto& k : els)
        if (els[i].is_subset_of(k) && els[j].is_subset_of(k) &&
            !join.is_subset_of(k))
          return fail("closure of union is not the least upper bound",
                      els[i], els[j]);
      const bool contained = els[i].is_subset_of(els[j]);
      const bool reversed = stab[j].is_subgroup_of(stab[i]);
      if (contained != reversed)
        return fail("stabilizer order is not reversed", els[i], els[j]);
    }
  }
  return report;
}

GaloisReport galois_report(const PermutationGroup& g, const Caps& caps) {
  return galois_report(g, enumerate_fixset_lattice(g, caps));
}

}  // namespace fixlat
