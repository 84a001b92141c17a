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

#include <set>

#include "doctest.h"
#include "fixlat/closure.hpp"
#include "fixlat/error.hpp"
#include "fixlat/fol.hpp"
#include "fixlat/oracle/brute_force.hpp"
#include "fixtures.hpp"

using namespace fixlat;
using fixlat::testing::fano_group;
using fixlat::testing::set_of;

namespace {

// Direct reading of definability: scan every tuple of every relation for a
// single coordinate outside X whose other coordinates lie in X, and accept
// it when no other tuple of the relation agrees on those coordinates.
PointSet naive_dcl(const RelationalStructure& s, PointSet x) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [arity, rels] : s.relations())
      for (const auto& r : rels)
        for (const auto& t : r.tuples)
          for (std::size_t slot = 0; slot < arity; ++slot) {
            if (x.contains(t[slot])) continue;
            bool rest_in = true;
            for (std::size_t j = 0; j < arity; ++j)
              if (j != slot && !x.contains(t[j])) rest_in = false;
            if (!rest_in) continue;
            std::size_t completions = 0;
            for (const auto& u : r.tuples) {
              bool same = true;
              for (std::size_t j = 0; j < arity; ++j)
                if (j != slot && u[j] != t[j]) same = false;
              if (same) ++completions;
            }
            if (completions == 1) {
              x.insert(t[slot]);
              grew = true;
            }
          }
  }
  return x;
}

}  // namespace

TEST_CASE("canonical_structure") {
  const auto s4 = canonical_structure(symmetric_group(4), 2);
  REQUIRE(s4.relations(2).size() == 1);
  CHECK(s4.relations(2)[0].tuples.size() == 12);

  const auto fano = canonical_structure(fano_group(), 3);
  REQUIRE(fano.relations(3).size() == 2);
  std::set<std::size_t> sizes{fano.relations(3)[0].tuples.size(),
                              fano.relations(3)[1].tuples.size()};
  // 7 lines times 3! orderings collinear, the rest of 7*6*5 not
  CHECK(sizes == std::set<std::size_t>{42, 168});
  CHECK(oracle::tuple_orbit_count(7, fano_group().generators(), 3) == 2);

  const auto d6 = canonical_structure(dihedral_group(6), 2);
  CHECK(d6.relations(2).size() == 3);
  CHECK(oracle::tuple_orbit_count(6, dihedral_group(6).generators(), 2) == 3);

  CHECK_THROWS_AS(canonical_structure(fano_group(), 1), ValidationError);
  CHECK_THROWS_AS(canonical_structure(fano_group(), 5), CapacityError);
  Caps tiny;
  tiny.tuple_count = 100;
  CHECK_THROWS_AS(canonical_structure(fano_group(), 3, tiny), CapacityError);
}

TEST_CASE("canonical structure invariants") {
  for (const auto& g : fixlat::testing::random_groups(15, 21)) {
    const auto s = canonical_structure(g, 3);
    const std::size_t n = g.degree();
    for (std::size_t arity = 2; arity <= 3; ++arity) {
      std::size_t total = 0;
      std::set<Tuple> seen;
      for (const auto& r : s.relations(arity)) {
        total += r.tuples.size();
        const std::set<Tuple> members(r.tuples.begin(), r.tuples.end());
        for (const auto& t : r.tuples) {
          CHECK(seen.insert(t).second);
          for (const auto& gen : g.generators()) {
            Tuple img = t;
            for (auto& c : img) c = gen(c);
            CHECK(members.count(img) == 1);
          }
        }
      }
      std::size_t distinct = 1;
      for (std::size_t i = 0; i < arity; ++i) distinct *= n - i;
      CHECK(total == distinct);
      CHECK(s.relations(arity).size() ==
            oracle::tuple_orbit_count(n, g.generators(), arity));
    }
  }
}

TEST_CASE("relational_dcl") {
  const auto fano = canonical_structure(fano_group(), 3);
  CHECK(relational_dcl(fano, PointSet::full(7)).is_full());
  for (const auto& line : oracle::fano_lines())
    CHECK(relational_dcl(fano, set_of(7, {line[0], line[1]})) ==
          PointSet(7, std::span<const Point>(line)));
  const auto s5 = canonical_structure(symmetric_group(5), 3);
  for (std::uint64_t m = 0; m < 32; ++m) {
    const auto x = PointSet::from_mask(5, m);
    if (x.size() < 4) CHECK(relational_dcl(s5, x) == x);
  }
  const auto d6 = canonical_structure(dihedral_group(6), 2);
  CHECK(relational_dcl(d6, set_of(6, {0})) == set_of(6, {0, 3}));
}

TEST_CASE("dcl_vs_fixset_report") {
  const auto fano = dcl_vs_fixset_report(fano_group(), 3);
  CHECK(fano.exhaustive);
  CHECK(fano.tested == 128);
  CHECK(fano.agreements == 128);
  CHECK(fano.sound);
  const auto s6 = dcl_vs_fixset_report(symmetric_group(6), 2);
  CHECK(s6.sound);
  for (const auto& d : s6.disagreements) CHECK(d.subset.size() != 1);
  const auto d6 = dcl_vs_fixset_report(dihedral_group(6), 2);
  CHECK(d6.sound);
  for (const auto& d : d6.disagreements) CHECK(d.subset != set_of(6, {0}));
  // sampled mode is reproducible from the seed
  const auto big1 = dcl_vs_fixset_report(fixlat::testing::pg32_group(), 3, 9, 64);
  const auto big2 = dcl_vs_fixset_report(fixlat::testing::pg32_group(), 3, 9, 64);
  CHECK_FALSE(big1.exhaustive);
  CHECK(big1.tested == big2.tested);
  CHECK(big1.agreements == big2.agreements);
  CHECK(big1.sound);
}

TEST_CASE("property: dcl closure axioms, soundness, arity monotonicity, invariance") {
  std::vector<PermutationGroup> groups{fano_group(), dihedral_group(6),
                                       cyclic_group(5), symmetric_group(4)};
  for (const auto& g : fixlat::testing::random_groups(12, 99)) groups.push_back(g);
  std::mt19937_64 rng(4);
  for (const auto& g : groups) {
    const std::size_t n = g.degree();
    const auto s = canonical_structure(g, 3);
    ClosureOperator close(g);
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      const auto x = PointSet::from_mask(n, m);
      const auto d = relational_dcl(s, x);
      CHECK(d == naive_dcl(s, x));
      CHECK(x.is_subset_of(d));
      CHECK(relational_dcl(s, d) == d);
      CHECK(d.is_subset_of(close(x)));
      CHECK(relational_dcl(s, x, 2).is_subset_of(d));
      for (Point a = 0; a < n; ++a) {
        PointSet y = x;
        y.insert(a);
        CHECK(d.is_subset_of(relational_dcl(s, y)));
      }
      const auto& gens = g.generators();
      if (!gens.empty()) {
        const auto& h = gens[rng() % gens.size()];
        CHECK(h.image(d) == relational_dcl(s, h.image(x)));
      }
    }
  }
}
