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

#include "doctest.h"
#include "fixlat/closure.hpp"
#include "fixlat/error.hpp"
#include "fixlat/oracle/brute_force.hpp"
#include "fixtures.hpp"

using namespace fixlat;
using fixlat::testing::fano_group;
using fixlat::testing::set_of;

TEST_CASE("fixed_points") {
  CHECK(fixed_points(PermutationGroup::trivial(5)).is_full());
  CHECK(fixed_points(symmetric_group(4)).empty());
  CHECK(fixed_points(fano_group().pointwise_stabilizer(set_of(7, {0, 1}))) ==
        set_of(7, {0, 1, 2}));
}

TEST_CASE("fixset_closure") {
  const auto& g = fano_group();
  CHECK(fixset_closure(g, PointSet::full(7)).points.is_full());
  CHECK(fixset_closure(symmetric_group(6), set_of(6, {1, 4})).points ==
        set_of(6, {1, 4}));
  const auto elements = oracle::enumerate_elements(7, g.generators());
  for (const auto& line : oracle::fano_lines()) {
    const auto pair = set_of(7, {line[0], line[1]});
    CHECK(fixset_closure(g, pair).points ==
          PointSet(7, std::span<const Point>(line)));
    CHECK(oracle::brute_closure(elements, pair) ==
          PointSet(7, std::span<const Point>(line)));
  }
  CHECK_THROWS_AS(fixset_closure(g, PointSet(6)), ValidationError);
}

TEST_CASE("closure axioms on every subset of small domains") {
  std::vector<PermutationGroup> groups{fano_group(), dihedral_group(6),
                                       symmetric_group(4), cyclic_group(5)};
  for (const auto& g : fixlat::testing::random_groups(10, 3))
    groups.push_back(g);
  for (const auto& g : groups) {
    const std::size_t n = g.degree();
    const auto elements = oracle::enumerate_elements(n, g.generators());
    ClosureOperator close(g);
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      const auto s = PointSet::from_mask(n, m);
      const auto c = close(s);
      CHECK(c == oracle::brute_closure(elements, s));
      CHECK(s.is_subset_of(c));              // extensive
      CHECK(close(c) == c);                  // idempotent
      for (Point x = 0; x < n; ++x) {        // increasing
        PointSet bigger = s;
        bigger.insert(x);
        CHECK(c.is_subset_of(close(bigger)));
      }
      // closure equals the iterated join of singleton closures
      PointSet acc = close(PointSet(n));
      s.for_each([&](Point a) { acc = close(acc | close(PointSet(n, {a}))); });
      CHECK(acc == c);
    }
  }
}

TEST_CASE("is_fixset") {
  const auto& g = fano_group();
  CHECK(is_fixset(g, set_of(7, {0, 1, 2})));
  CHECK_FALSE(is_fixset(g, set_of(7, {0, 1})));
  // On a finite domain, fixing all but one point fixes the last one too, so
  // exactly the 4-point subsets of a 5-point domain fail.
  const auto s5 = symmetric_group(5);
  for (std::uint64_t m = 0; m < 32; ++m) {
    const auto s = PointSet::from_mask(5, m);
    CHECK(is_fixset(s5, s) == (s.size() != 4));
  }
}

TEST_CASE("fix_meet and fix_join") {
  const auto& g = fano_group();
  const auto lines = oracle::fano_lines();
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const FixSet a{PointSet(7, std::span<const Point>(lines[i])),
                     g.fingerprint()};
      const FixSet b{PointSet(7, std::span<const Point>(lines[j])),
                     g.fingerprint()};
      CHECK(fix_meet(g, a, b).points.size() == 1);
      CHECK(fix_join(g, a, b).points.is_full());
    }
  const FixSet p{set_of(7, {3}), g.fingerprint()};
  const FixSet q{set_of(7, {5}), g.fingerprint()};
  const auto line = fix_join(g, p, q).points;
  CHECK(line.size() == 3);
  CHECK(std::find(lines.begin(), lines.end(), line.to_vector()) != lines.end());

  const FixSet bottom{PointSet(7), g.fingerprint()};
  CHECK(fix_meet(g, bottom, p).points.empty());
  CHECK(fix_join(g, bottom, p) == p);

  const FixSet not_closed{set_of(7, {0, 1}), g.fingerprint()};
  CHECK_THROWS_AS(fix_meet(g, not_closed, p), PreconditionError);
  const FixSet foreign{set_of(7, {3}), 12345};
  CHECK_THROWS_AS(fix_join(g, foreign, p), PreconditionError);
}

TEST_CASE("enumerate_fixset_lattice") {
  const auto s3 = enumerate_fixset_lattice(symmetric_group(3));
  CHECK(s3.size() == 5);
  const auto fano = enumerate_fixset_lattice(fano_group());
  CHECK(fano.size() == 16);
  CHECK(fano.size_profile() == std::vector<std::size_t>{1, 7, 0, 7, 0, 0, 0, 1});
  // brute-force oracle: close all 128 subsets with the 168 elements
  const auto elements = oracle::enumerate_elements(7, fano_group().generators());
  std::vector<PointSet> closed;
  for (std::uint64_t m = 0; m < 128; ++m)
    closed.push_back(oracle::brute_closure(elements, PointSet::from_mask(7, m)));
  CHECK(SetLattice(7, closed) == fano);

  const auto pg32 = enumerate_fixset_lattice(fixlat::testing::pg32_group());
  CHECK(pg32.size() == 67);
  CHECK(pg32 == subspace_lattice(2, 3));

  // Sym(n): every subset except the (n-1)-subsets
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = symmetric_group(n);
    const auto elements = oracle::enumerate_elements(n, g.generators());
    std::vector<PointSet> all;
    for (std::uint64_t m = 0; m < (1u << n); ++m)
      all.push_back(oracle::brute_closure(elements, PointSet::from_mask(n, m)));
    const auto lat = enumerate_fixset_lattice(g);
    CHECK(lat == SetLattice(n, all));
    CHECK(lat.size() == (1u << n) - n);
  }
  CHECK(enumerate_fixset_lattice(symmetric_group(1)).size() == 1);

  // bottom is fix(G) when G has fixed points
  const PermutationGroup partial(4, {Permutation::from_cycles(4, "(0 1)")});
  const auto lp = enumerate_fixset_lattice(partial);
  CHECK(lp[0] == set_of(4, {2, 3}));

  Caps tiny;
  tiny.lattice_size = 10;
  try {
    enumerate_fixset_lattice(symmetric_group(5), tiny);
    FAIL("expected capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.reached() == 10);
  }
}

TEST_CASE("galois_report") {
  const auto s4 = galois_report(symmetric_group(4));
  CHECK(s4.pass);
  CHECK(s4.fixsets == 12);
  const auto fano = galois_report(fano_group());
  CHECK(fano.pass);
  CHECK(fano.pairs_checked == 256);
  CHECK(galois_report(fixlat::testing::pgl25_group()).pass);
  CHECK(galois_report(dihedral_group(6)).pass);

  const auto full = enumerate_fixset_lattice(fano_group());
  for (std::size_t i = 0; i < full.size(); ++i) {
    const auto r = galois_report(fano_group(), full.without(i));
    CHECK_FALSE(r.pass);
    CHECK(r.witness.has_value());
  }
}

TEST_CASE("property: intersections of fixsets are fixsets; join equality") {
  std::mt19937_64 rng(31);
  for (const auto& g : {fano_group(), fixlat::testing::pgl25_group(),
                        dihedral_group(6), symmetric_group(5)}) {
    const auto lat = enumerate_fixset_lattice(g);
    for (int t = 0; t < 200; ++t) {
      PointSet acc = PointSet::full(g.degree());
      const std::size_t count = 1 + rng() % 4;
      for (std::size_t k = 0; k < count; ++k) acc &= lat[rng() % lat.size()];
      CHECK(is_fixset(g, acc));
    }
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        const FixSet a{lat[i], g.fingerprint()}, b{lat[j], g.fingerprint()};
        const auto u = lat[i] | lat[j];
        const auto jn = fix_join(g, a, b).points;
        CHECK(u.is_subset_of(jn));
        CHECK((jn == u) == is_fixset(g, u));
      }
  }
}

TEST_CASE("property: closure axioms on random subsets of larger domains") {
  const auto& g = fixlat::testing::pg32_group();
  ClosureOperator close(g);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const auto s = PointSet::from_mask(15, rng() & 0x7fff);
    const auto c = close(s);
    CHECK(s.is_subset_of(c));
    CHECK(close(c) == c);
    auto bigger = s;
    bigger.insert(static_cast<Point>(rng() % 15));
    CHECK(c.is_subset_of(close(bigger)));
    CHECK(c == fixed_points(g.pointwise_stabilizer(s)));
  }
}
