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
#include "fixlat/geometry.hpp"
#include "fixlat/oracle/brute_force.hpp"
#include "fixtures.hpp"

using namespace fixlat;
using fixlat::testing::set_of;

TEST_CASE("prime field") {
  const PrimeField f(7);
  for (PrimeField::Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.primitive_root() == 3);
  CHECK_THROWS_AS(PrimeField(4), ValidationError);
  CHECK_THROWS_AS(PrimeField(1), ValidationError);
}

TEST_CASE("projective_points") {
  CHECK(projective_points(2, 2).num_points() == 7);
  CHECK(projective_points(5, 1).num_points() == 6);
  CHECK(projective_points(3, 2).num_points() == 13);
  CHECK_THROWS_AS(projective_points(6, 2), ValidationError);
  const auto s = projective_points(2, 2);
  // lexicographic numbering: point i has binary value i + 1
  for (Point i = 0; i < 7; ++i) {
    const auto& c = s.point(i).coords;
    CHECK(c[0] * 4 + c[1] * 2 + c[2] == i + 1);
  }
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {5, 1}, {3, 3}, {7, 2}})
    CHECK(projective_points(p, d).num_points() == projective_point_count(p, d));
}

TEST_CASE("span_closure") {
  const auto s = projective_points(2, 2);
  for (const auto& line : oracle::fano_lines())
    CHECK(span_closure(s, set_of(7, {line[0], line[2]})) ==
          PointSet(7, std::span<const Point>(line)));
  CHECK(span_closure(s, set_of(7, {4})) == set_of(7, {4}));
  CHECK(span_closure(s, set_of(7, {0, 1, 3})).is_full());
  CHECK(span_closure(s, PointSet(7)).empty());
}

TEST_CASE("pgl_generators") {
  CHECK(pgl_generators(2, 2).order() == 168);
  CHECK(pgl_generators(5, 1).order() == 120);
  CHECK(pgl_generators(2, 3).order() == 20160);
  CHECK(pgl_order(2, 3) == 20160);
  CHECK(pgl_order(3, 2) == 5616);
  CHECK(pgl_generators(3, 2).order() == 5616);
  CHECK(pgl_generators(2, 2).generators().size() == 2);
}

TEST_CASE("subspace_lattice") {
  CHECK(subspace_lattice(2, 2).size_profile() ==
        std::vector<std::size_t>{1, 7, 0, 7, 0, 0, 0, 1});
  const auto pg32 = subspace_lattice(2, 3);
  CHECK(pg32.size() == 67);
  CHECK(pg32.size_profile()[3] == 35);
  CHECK(subspace_lattice(3, 2).size() == 28);
  // Gaussian binomials match the enumeration
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= d + 1; ++k) total += gaussian_binomial(d + 1, k, p);
    CHECK(subspace_lattice(p, d).size() == total);
  }
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
}

TEST_CASE("oracle_iso_check") {
  CHECK(oracle_iso_check(2, 2));
  CHECK(oracle_iso_check(2, 3));
  // Over GF(p) with p > 2 the stabilizer of two points scales the rest of
  // their line without fixing it, so point pairs are fixsets.
  const auto r = oracle_iso_report(3, 2);
  CHECK_FALSE(r.isomorphic);
  CHECK(r.subspace_count == 28);
  const auto pg23 = pgl_generators(3, 2);
  const auto elements = oracle::enumerate_elements(13, pg23.generators());
  CHECK(elements.size() == 5616);
  const auto pair = set_of(13, {0, 1});
  CHECK(oracle::brute_closure(elements, pair) == pair);
  CHECK(span_closure(projective_points(3, 2), pair).size() == 4);
  CHECK_FALSE(oracle_iso_check(5, 1));
}

TEST_CASE("span agrees with fixset closure") {
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{
           {2, 2}, {2, 3}}) {
    const auto space = projective_points(p, d);
    const auto g = pgl_generators(space);
    const std::size_t n = space.num_points();
    ClosureOperator close(g);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto s = PointSet::from_mask(n, m);
      const auto sp = span_closure(space, s);
      CHECK(sp == close(s));
      CHECK(span_closure(space, sp) == sp);
    }
  }
}
