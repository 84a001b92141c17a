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

#include "fixlat/oracle/brute_force.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "fixlat/error.hpp"

namespace fixlat::oracle {

std::vector<Permutation> enumerate_elements(
    std::size_t degree, const std::vector<Permutation>& generators,
    std::size_t limit) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(elements.begin(),
                                                        elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation h = elements[i] * g;
      if (seen.insert(h).second) {
        if (elements.size() >= limit)
          throw CapacityError("exhaustive_order", limit, elements.size(),
                              "group too large for exhaustive enumeration");
        elements.push_back(std::move(h));
      }
    }
  }
  return elements;
}

std::vector<Permutation> stabilizer_elements(
    const std::vector<Permutation>& elements, const PointSet& delta) {
  std::vector<Permutation> out;
  for (const auto& g : elements)
    if (g.fixes_pointwise(delta)) out.push_back(g);
  return out;
}

PointSet brute_closure(const std::vector<Permutation>& elements,
                       const PointSet& delta) {
  PointSet out = PointSet::full(delta.universe());
  for (const auto& g : elements) {
    if (!g.fixes_pointwise(delta)) continue;
    for (Point x = 0; x < g.degree(); ++x)
      if (!g.fixes(x)) out.erase(x);
  }
  return out;
}

bool brute_contains(const std::vector<Permutation>& elements,
                    const Permutation& p) {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

std::size_t tuple_orbit_count(std::size_t degree,
                              const std::vector<Permutation>& generators,
                              std::size_t k) {
  std::set<std::vector<Point>> unseen;
  std::vector<Point> t(k);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == k) {
      unseen.insert(t);
      return;
    }
    for (Point x = 0; x < degree; ++x) {
      if (std::find(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pos),
                    x) != t.begin() + static_cast<std::ptrdiff_t>(pos))
        continue;
      t[pos] = x;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  std::size_t orbits = 0;
  while (!unseen.empty()) {
    ++orbits;
    std::vector<std::vector<Point>> queue{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!queue.empty()) {
      auto cur = std::move(queue.back());
      queue.pop_back();
      for (const auto& g : generators) {
        std::vector<Point> img(k);
        for (std::size_t i = 0; i < k; ++i) img[i] = g(cur[i]);
        if (unseen.erase(img)) queue.push_back(std::move(img));
      }
    }
  }
  return orbits;
}

std::vector<std::vector<std::vector<Point>>> invariant_partitions(
    std::size_t degree, const std::vector<Permutation>& generators) {
  if (degree > 10)
    throw CapacityError("degree", 10, degree, "partition enumeration capped");
  std::vector<std::vector<std::vector<Point>>> out;
  std::vector<std::size_t> label(degree, 0);
  auto emit = [&](std::size_t parts) {
    if (parts == 1 || parts == degree) return;
    std::vector<std::vector<Point>> blocks(parts);
    for (Point x = 0; x < degree; ++x) blocks[label[x]].push_back(x);
    for (const auto& g : generators)
      for (const auto& b : blocks)
        for (Point x : b)
          if (label[g(x)] != label[g(b.front())]) return;
    out.push_back(std::move(blocks));
  };
  // Restricted growth strings.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t parts) -> void {
    if (pos == degree) {
      emit(parts);
      return;
    }
    for (std::size_t c = 0; c <= parts; ++c) {
      label[pos] = c;
      self(self, pos + 1, std::max(parts, c + 1));
    }
  };
  if (degree > 0) rec(rec, 1, 1);
  return out;
}

std::size_t order_automorphism_count(
    const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  if (n > 10) throw CapacityError("size", 10, n, "brute force capped");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        ok = leq[a][b] == leq[perm[a]][perm[b]];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<std::vector<Point>> fano_lines() {
  std::set<std::vector<Point>> lines;
  for (Point a = 1; a <= 7; ++a)
    for (Point b = a + 1; b <= 7; ++b) {
      std::vector<Point> l{a - 1, b - 1, (a ^ b) - 1};
      std::sort(l.begin(), l.end());
      lines.insert(l);
    }
  return {lines.begin(), lines.end()};
}

}  // namespace fixlat::oracle
