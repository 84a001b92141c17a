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

#ifndef FIXLAT_TESTS_FIXTURES_HPP_
#define FIXLAT_TESTS_FIXTURES_HPP_

#include <random>
#include <vector>

#include "fixlat/geometry.hpp"
#include "fixlat/lattice.hpp"
#include "fixlat/perm_group.hpp"

namespace fixlat::testing {

inline const PermutationGroup& fano_group() {
  static const PermutationGroup g = pgl_generators(2, 2);
  return g;
}
inline const PermutationGroup& pgl25_group() {
  static const PermutationGroup g = pgl_generators(5, 1);
  return g;
}
inline const PermutationGroup& pg32_group() {
  static const PermutationGroup g = pgl_generators(2, 3);
  return g;
}
inline const FiniteLattice& fano_subspaces() {
  static const FiniteLattice l = subspace_lattice(2, 2).to_finite_lattice();
  return l;
}

inline PointSet set_of(std::size_t n, std::initializer_list<Point> pts) {
  return PointSet(n, pts);
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// Random groups on small domains: one or two random generators, sometimes
// a product of smaller groups so intransitive cases show up.
inline std::vector<PermutationGroup> random_groups(std::size_t count,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PermutationGroup> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 3 + rng() % 6;
    std::vector<Permutation> gens;
    const std::size_t ngens = 1 + rng() % 2;
    for (std::size_t k = 0; k < ngens; ++k) {
      if (rng() % 3 == 0) {
        // permutation supported on a prefix only
        const std::size_t m = 2 + rng() % (n - 1);
        auto small = random_permutation(m, rng).images();
        for (std::size_t x = m; x < n; ++x) small.push_back(static_cast<Point>(x));
        gens.emplace_back(std::move(small));
      } else {
        gens.push_back(random_permutation(n, rng));
      }
    }
    out.emplace_back(n, std::move(gens));
  }
  return out;
}

}  // namespace fixlat::testing

#endif  // FIXLAT_TESTS_FIXTURES_HPP_
