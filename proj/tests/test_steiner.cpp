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
#include "fixlat/error.hpp"
#include "fixlat/oracle/brute_force.hpp"
#include "fixlat/steiner.hpp"
#include "fixtures.hpp"

using namespace fixlat;
using fixlat::testing::fano_group;

namespace {

SteinerSystem fano_system() {
  SteinerSystem s{2, 7, oracle::fano_lines()};
  s.normalize();
  return s;
}

std::size_t count_kind(const SteinerVerification& v, SteinerViolation::Kind k) {
  std::size_t c = 0;
  for (const auto& x : v.violations) c += x.kind == k;
  return c;
}

}  // namespace

TEST_CASE("verify_steiner") {
  CHECK(verify_steiner(fano_system()).valid);
  auto broken = fano_system();
  broken.blocks.pop_back();
  const auto v = verify_steiner(broken);
  CHECK_FALSE(v.valid);
  CHECK(count_kind(v, SteinerViolation::Kind::kUncovered) == 3);

  const auto ag = steiner_from_affine(3, 2);
  CHECK(ag.num_points == 9);
  CHECK(ag.blocks.size() == 12);
  CHECK(verify_steiner(ag).valid);

  auto doubled = fano_system();
  doubled.blocks.push_back(doubled.blocks.front());
  CHECK(count_kind(verify_steiner(doubled), SteinerViolation::Kind::kMultiplyCovered) == 3);
  SteinerSystem uneven{2, 4, {{0, 1, 2}, {0, 3}}};
  CHECK(count_kind(verify_steiner(uneven), SteinerViolation::Kind::kUnequalBlockSize) > 0);
  SteinerSystem oob{2, 3, {{0, 1, 5}}};
  CHECK(count_kind(verify_steiner(oob), SteinerViolation::Kind::kPointOutOfRange) > 0);
}

TEST_CASE("constructions") {
  const auto pg22 = steiner_from_projective(2, 2);
  CHECK(pg22.num_points == 7);
  CHECK(pg22.blocks.size() == 7);
  CHECK(pg22.block_size() == 3);
  CHECK(pg22 == fano_system());
  const auto pg23 = steiner_from_projective(2, 3);
  CHECK(pg23.num_points == 15);
  CHECK(pg23.blocks.size() == 35);
  CHECK(verify_steiner(pg23).valid);
  CHECK(verify_steiner(steiner_from_projective(3, 2)).valid);
  CHECK_THROWS_AS(steiner_from_affine(2, 3), ValidationError);
  CHECK(verify_steiner(steiner_from_affine(5, 2)).valid);
  CHECK_THROWS_AS(steiner_from_projective(4, 2), ValidationError);
  CHECK_THROWS_AS(steiner_from_affine(2, 1), ValidationError);

  const auto s348 = steiner_from_affine_planes(3);
  CHECK(s348.k == 3);
  CHECK(s348.num_points == 8);
  CHECK(s348.blocks.size() == 14);
  CHECK(verify_steiner(s348).valid);

  for (const auto& s : {pg22, pg23, steiner_from_projective(3, 2),
                        steiner_from_affine(3, 2), steiner_from_affine(3, 3),
                        steiner_from_affine(5, 2), steiner_from_projective(5, 2)})
    CHECK(satisfies_counting_identity(s));
  CHECK_FALSE(satisfies_counting_identity(SteinerSystem{2, 7, {{0, 1, 2}}}));
}

TEST_CASE("derivation") {
  const auto s348 = steiner_from_affine_planes(3);
  const auto fano = fano_system();
  for (Point p = 0; p < 8; ++p) {
    const auto d = derivation(s348, p);
    CHECK(d.k == 2);
    CHECK(d.num_points == 7);
    CHECK(verify_steiner(d).valid);
    const auto iso = steiner_isomorphism(d, fano);
    REQUIRE(iso);
    // the map carries blocks onto blocks
    for (const auto& b : d.blocks) {
      std::vector<Point> img;
      for (Point x : b) img.push_back((*iso)[x]);
      std::sort(img.begin(), img.end());
      CHECK(std::find(fano.blocks.begin(), fano.blocks.end(), img) !=
            fano.blocks.end());
    }
  }
  CHECK_THROWS_AS(derivation(fano, 0), PreconditionError);
  CHECK_THROWS_AS(derivation(s348, 8), ValidationError);
  CHECK_FALSE(steiner_isomorphism(fano, steiner_from_affine(3, 2)));
}

TEST_CASE("jordan_report") {
  const auto fano = jordan_report(fano_group());
  CHECK(fano.condition_T);
  CHECK(fano.entries.size() == 14);
  CHECK(fano.transitivity_degree == 2);
  for (const auto& e : fano.entries) {
    CHECK(e.jordan);
    CHECK(e.complement_orbits[0].size() == (e.fixset.size() == 1 ? 6 : 4));
  }
  const auto s6 = jordan_report(symmetric_group(6));
  CHECK(s6.condition_T);
  CHECK(s6.transitivity_degree == 5);

  const auto d6 = jordan_report(dihedral_group(6));
  CHECK_FALSE(d6.condition_T);
  REQUIRE(d6.first_failure);
  const auto& bad = d6.entries[*d6.first_failure];
  CHECK(bad.fixset == PointSet(6, {0, 3}));
  CHECK(bad.complement_orbits ==
        std::vector<std::vector<Point>>{{1, 5}, {2, 4}});

  const auto pgl25 = jordan_report(fixlat::testing::pgl25_group());
  CHECK(pgl25.condition_T);
  CHECK(pgl25.transitivity_degree == 3);
  const auto pg32 = jordan_report(fixlat::testing::pg32_group());
  CHECK(pg32.condition_T);
  CHECK(pg32.transitivity_degree == 2);

  // Over GF(3) two points are their own fixset and their stabilizer splits
  // the complement into the rest of the line and the points off it.
  const auto pg23 = jordan_report(pgl_generators(3, 2));
  CHECK_FALSE(pg23.condition_T);
  CHECK(pg23.transitivity_degree == 2);
}

TEST_CASE("steiner_automorphism_check") {
  const auto fano = fano_system();
  CHECK(steiner_automorphism_check(fano, fano_group()).preserves_blocks);
  const PermutationGroup swap(7, {Permutation::from_cycles(7, "(0 3)")});
  const auto bad = steiner_automorphism_check(fano, swap);
  CHECK_FALSE(bad.preserves_blocks);
  CHECK(bad.block.has_value());
  CHECK(steiner_automorphism_check(fano, PermutationGroup::trivial(7))
            .preserves_blocks);
  CHECK(steiner_automorphism_check(steiner_from_projective(2, 3),
                                   fixlat::testing::pg32_group())
            .preserves_blocks);
  CHECK_THROWS_AS(steiner_automorphism_check(fano, symmetric_group(6)),
                  ValidationError);
}

TEST_CASE("block pointwise stabilization") {
  CHECK(block_pointwise_stabilization(fano_system(), fano_group()).pointwise);
  CHECK(block_pointwise_stabilization(steiner_from_projective(2, 3),
                                      fixlat::testing::pg32_group())
            .pointwise);
  const auto ag = steiner_from_affine_planes(3);
  // AG(3,2) automorphisms: translations and GL(3,2)
  std::vector<Permutation> gens;
  for (Point t : {1u, 2u, 4u}) {
    std::vector<Point> img(8);
    for (Point x = 0; x < 8; ++x) img[x] = x ^ t;
    gens.emplace_back(img);
  }
  const auto& gl = fano_group();  // acts on nonzero vectors as point i -> i+1
  for (const auto& g : gl.generators()) {
    std::vector<Point> img(8);
    img[0] = 0;
    for (Point x = 1; x < 8; ++x) img[x] = g(x - 1) + 1;
    gens.emplace_back(img);
  }
  const PermutationGroup agl(8, gens);
  CHECK(agl.order() == 1344);
  CHECK(steiner_automorphism_check(ag, agl).preserves_blocks);
  CHECK(block_pointwise_stabilization(ag, agl).pointwise);
  // over GF(3) the two points do not pin down the other two on their line
  const auto r = block_pointwise_stabilization(steiner_from_projective(3, 2),
                                               pgl_generators(3, 2));
  CHECK_FALSE(r.pointwise);
  CHECK(r.subset.has_value());
}
