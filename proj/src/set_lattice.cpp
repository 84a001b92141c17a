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

#include "fixlat/set_lattice.hpp"

#include <algorithm>

#include "fixlat/error.hpp"
#include "fixlat/lattice.hpp"

namespace fixlat {

SetLattice::SetLattice(std::size_t universe, std::vector<PointSet> elements)
    : universe_(universe), elements_(std::move(elements)) {
  for (const auto& e : elements_)
    if (e.universe() != universe_)
      throw ValidationError("set lattice: element universe mismatch");
  std::sort(elements_.begin(), elements_.end(),
            [](const PointSet& a, const PointSet& b) {
              return size_lex_less(a, b);
            });
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], i);
}

std::optional<std::size_t> SetLattice::index_of(const PointSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> SetLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (elements_[j].size() == elements_[i].size() ||
          !elements_[i].is_subset_of(elements_[j]))
        continue;
      bool covered = true;
      for (std::size_t k = i + 1; k < j && covered; ++k) {
        const auto& mid = elements_[k];
        if (mid.size() > elements_[i].size() &&
            mid.size() < elements_[j].size() &&
            elements_[i].is_subset_of(mid) && mid.is_subset_of(elements_[j]))
          covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> SetLattice::size_profile() const {
  std::vector<std::size_t> out(universe_ + 1, 0);
  for (const auto& e : elements_) ++out[e.size()];
  return out;
}

FiniteLattice SetLattice::to_finite_lattice() const {
  const std::size_t n = elements_.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(elements_[i].to_string());
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = elements_[i].is_subset_of(elements_[j]);
  }
  return FiniteLattice::from_leq(std::move(leq), std::move(labels));
}

SetLattice SetLattice::without(std::size_t i) const {
  auto copy = elements_;
  copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(i));
  return SetLattice(universe_, std::move(copy));
}

}  // namespace fixlat
