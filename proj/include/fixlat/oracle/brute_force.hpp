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

#ifndef FIXLAT_ORACLE_BRUTE_FORCE_HPP_
#define FIXLAT_ORACLE_BRUTE_FORCE_HPP_

// Exhaustive reference computations. These only use Permutation, PointSet
// and raw order matrices, never the stabilizer chain, closure or search
// code they are used to check.

#include <cstddef>
#include <vector>

#include "fixlat/permutation.hpp"
#include "fixlat/point_set.hpp"

namespace fixlat::oracle {

// Every group element, by breadth-first product closure of the generators.
// Throws CapacityError past `limit` elements.
std::vector<Permutation> enumerate_elements(
    std::size_t degree, const std::vector<Permutation>& generators,
    std::size_t limit = 1'000'000);

std::vector<Permutation> stabilizer_elements(
    const std::vector<Permutation>& elements, const PointSet& delta);

// Points fixed by every element fixing `delta` pointwise.
PointSet brute_closure(const std::vector<Permutation>& elements,
                       const PointSet& delta);

bool brute_contains(const std::vector<Permutation>& elements,
                    const Permutation& p);

// Orbits on distinct k-tuples, counted by generator closure.
std::size_t tuple_orbit_count(std::size_t degree,
                              const std::vector<Permutation>& generators,
                              std::size_t k);

// Every G-invariant set partition other than the two trivial ones.
// Enumerates all set partitions; degree <= 10.
std::vector<std::vector<std::vector<Point>>> invariant_partitions(
    std::size_t degree, const std::vector<Permutation>& generators);

// Order automorphisms of a finite order by trying every permutation.
// Size <= 10.
std::size_t order_automorphism_count(const std::vector<std::vector<bool>>& leq);

// Lines of the Fano plane in the lexicographic point numbering: point i is
// the GF(2)^3 vector with binary value i+1, lines are {a, b, a xor b}.
std::vector<std::vector<Point>> fano_lines();

}  // namespace fixlat::oracle

#endif  // FIXLAT_ORACLE_BRUTE_FORCE_HPP_
