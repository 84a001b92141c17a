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

#include <numeric>

#include "doctest.h"
#include "fixlat/error.hpp"
#include "fixlat/oracle/brute_force.hpp"
#include "fixtures.hpp"

using namespace fixlat;
using fixlat::testing::fano_group;
using fixlat::testing::pgl25_group;
using fixlat::testing::set_of;

TEST_CASE("permutation validation and cycle notation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), ValidationError);
  const auto p = Permutation::from_cycles(5, "(0 1 2)(3 4)");
  CHECK(p.images() == std::vector<Point>{1, 2, 0, 4, 3});
  CHECK(p.to_cycles() == "(0 1 2)(3 4)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::from_cycles(3, "()").is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1)(1 2)"), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 5)"), ValidationError);
  // right action: apply first then second
  const auto a = Permutation::from_cycles(3, "(0 1)");
  const auto b = Permutation::from_cycles(3, "(1 2)");
  CHECK((a * b)(0) == 2);
}

TEST_CASE("group_from_generators") {
  CHECK(group_from_generators(3, {Permutation::from_cycles(3, "(0 1 2)")})
            .order() == 3);
  CHECK(group_from_generators(4, {}).order() == 1);
  CHECK(fano_group().order() == 168);
  CHECK(oracle::enumerate_elements(7, fano_group().generators()).size() == 168);
  CHECK_THROWS_AS(group_from_generators(4, {Permutation({1, 0, 2})}),
                  ValidationError);
  CHECK_THROWS_AS(PermutationGroup(0, {}), ValidationError);
  Caps tiny;
  tiny.max_degree = 8;
  CHECK_THROWS_AS(PermutationGroup(9, {}, tiny), CapacityError);
}

TEST_CASE("group_order") {
  CHECK(symmetric_group(5).order() == 120);
  CHECK(pgl25_group().order() == 120);
  CHECK(oracle::enumerate_elements(6, pgl25_group().generators()).size() == 120);
  CHECK(PermutationGroup::trivial(4).order() == 1);
  CHECK(symmetric_group(30).order().str() ==
        "265252859812191058636308480000000");
}

TEST_CASE("contains") {
  const auto s4 = symmetric_group(4);
  CHECK(s4.contains(Permutation::from_cycles(4, "(1 3)")));
  const auto a4 = alternating_group(4);
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(Permutation::from_cycles(4, "(0 1)")));
  CHECK_THROWS_AS(a4.contains(Permutation::identity(5)), ValidationError);

  const auto elements = oracle::enumerate_elements(7, fano_group().generators());
  const auto seven = Permutation::from_cycles(7, "(0 1 2 3 4 5 6)");
  CHECK(fano_group().contains(seven) == oracle::brute_contains(elements, seven));
}

TEST_CASE("orbit and orbits") {
  CHECK(PermutationGroup::trivial(5).orbit(2) == set_of(5, {2}));
  CHECK(cyclic_group(6).orbit(0).is_full());
  const auto d6 = dihedral_group(6);
  CHECK(d6.order() == 12);
  CHECK(d6.pointwise_stabilizer(set_of(6, {0})).orbit(1) == set_of(6, {1, 5}));
  CHECK_THROWS_AS(d6.orbit(6), ValidationError);

  CHECK(PermutationGroup::trivial(3).orbits() ==
        std::vector<std::vector<Point>>{{0}, {1}, {2}});
  CHECK(symmetric_group(4).orbits() ==
        std::vector<std::vector<Point>>{{0, 1, 2, 3}});

  // Pointwise stabilizer of a Fano line: the line as singletons plus one
  // 4-point orbit, checked against a filter of all 168 elements.
  const auto line = set_of(7, {0, 1, 2});
  REQUIRE(oracle::brute_closure(
              oracle::enumerate_elements(7, fano_group().generators()),
              set_of(7, {0, 1})) == line);
  const auto orbs = fano_group().pointwise_stabilizer(line).orbits();
  CHECK(orbs == std::vector<std::vector<Point>>{{0}, {1}, {2}, {3, 4, 5, 6}});
}

TEST_CASE("pointwise_stabilizer") {
  const auto& g = fano_group();
  CHECK(g.pointwise_stabilizer(PointSet(7)).same_group_as(g));
  const auto s = symmetric_group(4).pointwise_stabilizer(set_of(4, {0}));
  CHECK(s.order() == 6);
  CHECK(s.orbits() == std::vector<std::vector<Point>>{{0}, {1, 2, 3}});

  const auto elements = oracle::enumerate_elements(7, g.generators());
  const auto two = set_of(7, {0, 1});
  CHECK(g.pointwise_stabilizer(two).order() == 4);
  CHECK(oracle::stabilizer_elements(elements, two).size() == 4);
  CHECK_THROWS_AS(g.pointwise_stabilizer(PointSet(8)), ValidationError);
}

TEST_CASE("transitivity_degree") {
  CHECK(symmetric_group(6).transitivity_degree(5) == 5);
  CHECK(pgl25_group().transitivity_degree(4) == 3);
  CHECK(fano_group().transitivity_degree(3) == 2);
  // tuple-orbit oracle
  CHECK(oracle::tuple_orbit_count(6, pgl25_group().generators(), 3) == 1);
  CHECK(oracle::tuple_orbit_count(6, pgl25_group().generators(), 4) > 1);
  CHECK(oracle::tuple_orbit_count(7, fano_group().generators(), 2) == 1);
  CHECK(oracle::tuple_orbit_count(7, fano_group().generators(), 3) == 2);
  CHECK(PermutationGroup(4, {Permutation::from_cycles(4, "(0 1)")})
            .transitivity_degree(3) == 0);
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(symmetric_group(n).transitivity_degree(n) == n);
}

TEST_CASE("primitivity") {
  const auto c6 = cyclic_group(6).primitivity();
  CHECK_FALSE(c6.primitive);
  REQUIRE(c6.block_system);
  CHECK(*c6.block_system ==
        std::vector<std::vector<Point>>{{0, 3}, {1, 4}, {2, 5}});
  // the witness is one of the invariant partitions found by enumeration
  const auto parts =
      oracle::invariant_partitions(6, cyclic_group(6).generators());
  CHECK(std::find(parts.begin(), parts.end(), *c6.block_system) != parts.end());

  CHECK(symmetric_group(5).primitivity().primitive);
  CHECK(fano_group().primitivity().primitive);
  CHECK(oracle::invariant_partitions(7, fano_group().generators()).empty());
  CHECK_THROWS_AS(
      PermutationGroup(4, {Permutation::from_cycles(4, "(0 1)")}).primitivity(),
      PreconditionError);
}

TEST_CASE("property: chain agrees with exhaustive enumeration") {
  for (const auto& g : fixlat::testing::random_groups(40, 7)) {
    const auto elements = oracle::enumerate_elements(g.degree(), g.generators());
    CHECK(g.order() == elements.size());
    std::mt19937_64 rng(g.degree());
    for (int t = 0; t < 5; ++t) {
      const auto p = fixlat::testing::random_permutation(g.degree(), rng);
      CHECK(g.contains(p) == oracle::brute_contains(elements, p));
    }
    for (Point x = 0; x < g.degree(); ++x) {
      const PointSet single(g.degree(), {x});
      const auto stab = g.pointwise_stabilizer(single);
      // orbit-stabilizer
      CHECK(stab.order() * g.orbit(x).size() == g.order());
      CHECK(stab.order() == oracle::stabilizer_elements(elements, single).size());
    }
    // Monotone Galois direction: larger sets have smaller stabilizers.
    PointSet small(g.degree(), {0});
    PointSet big(g.degree(), {0, 1});
    CHECK(g.pointwise_stabilizer(big).is_subgroup_of(
        g.pointwise_stabilizer(small)));
  }
}

TEST_CASE("group equality is by membership, not generator lists") {
  const auto s3a = symmetric_group(3);
  const PermutationGroup s3b(3, {Permutation::from_cycles(3, "(0 1)"),
                                 Permutation::from_cycles(3, "(1 2)")});
  CHECK(s3a.generators() != s3b.generators());
  CHECK(s3a.same_group_as(s3b));
  CHECK_FALSE(cyclic_group(3).same_group_as(s3a));
}
