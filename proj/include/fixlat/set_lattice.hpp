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

#ifndef FIXLAT_SET_LATTICE_HPP_
#define FIXLAT_SET_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fixlat/point_set.hpp"

namespace fixlat {

class FiniteLattice;

// A family of subsets of a finite universe, ordered by containment.
// Elements are deduplicated and sorted by size, then lexicographically.
class SetLattice {
 public:
  SetLattice() = default;
  SetLattice(std::size_t universe, std::vector<PointSet> elements);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<PointSet>& elements() const { return elements_; }
  const PointSet& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const PointSet& s) const;
  bool contains(const PointSet& s) const { return index_of(s).has_value(); }

  // Hasse diagram: (lower, upper) index pairs.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  // Element counts by cardinality, index = cardinality.
  std::vector<std::size_t> size_profile() const;

  // Containment order as an explicit lattice; labels are point lists.
  FiniteLattice to_finite_lattice() const;

  // Copy with element `i` removed. Used for negative controls.
  SetLattice without(std::size_t i) const;

  friend bool operator==(const SetLattice& a, const SetLattice& b) {
    return a.universe_ == b.universe_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<PointSet> elements_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> index_;
};

// Saturates `seeds` under a binary join until closed. Deterministic: pairs
// are joined in discovery order. Throws CapacityError past `cap` elements.
template <typename Join>
std::vector<PointSet> saturate_under_join(std::vector<PointSet> seeds,
                                          Join&& join, std::size_t cap);

}  // namespace fixlat

#include "fixlat/error.hpp"

namespace fixlat {

template <typename Join>
std::vector<PointSet> saturate_under_join(std::vector<PointSet> seeds,
                                          Join&& join, std::size_t cap) {
  std::vector<PointSet> elements;
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  auto add = [&](PointSet s) {
    if (index.contains(s)) return;
    if (elements.size() >= cap)
      throw CapacityError("lattice", cap, elements.size(),
                          "lattice size cap " + std::to_string(cap) +
                              " exceeded after " +
                              std::to_string(elements.size()) + " elements");
    index.emplace(s, elements.size());
    elements.push_back(std::move(s));
  };
  for (auto& s : seeds) add(std::move(s));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      PointSet u = elements[i] | elements[j];
      if (index.contains(u)) continue;
      add(join(u));
    }
  }
  return elements;
}

}  // namespace fixlat

#endif  // FIXLAT_SET_LATTICE_HPP_
