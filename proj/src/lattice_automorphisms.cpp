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

// Order automorphisms of explicit lattices by backtracking.
//
// The search produces a generating set level by level: with the assignment
// order v_0, v_1, ... as base, level i looks for one automorphism fixing
// v_0..v_{i-1} and sending v_i to each candidate not yet in the orbit of v_i
// under the generators found so far.

#include <algorithm>
#include <unordered_map>

#include "fixlat/error.hpp"
#include "fixlat/lattice.hpp"

namespace fixlat {

namespace {

constexpr std::int64_t kUnset = -1;

// Problem interface (duck-typed):
//   size(), order(), unary_ok(x, y), extend_ok(map, pos, x, y), leaf_ok(map)
template <typename Problem>
class CosetSearch {
 public:
  explicit CosetSearch(const Problem& problem)
      : problem_(problem),
        order_(problem.order()),
        map_(problem.size(), kUnset),
        inv_(problem.size(), kUnset) {}

  std::vector<std::vector<Point>> generators() {
    const std::size_t m = order_.size();
    std::vector<std::vector<Point>> gens;
    for (std::size_t i = m; i-- > 0;) {
      const Point v = static_cast<Point>(order_[i]);
      auto in_orbit = orbit_of(v, gens);
      for (Point c = 0; c < m; ++c) {
        if (c == v || in_orbit[c] || !problem_.unary_ok(v, c)) continue;
        if (search(0, i, c)) {
          std::vector<Point> perm(m);
          for (std::size_t x = 0; x < m; ++x)
            perm[x] = static_cast<Point>(map_[x]);
          gens.push_back(std::move(perm));
          in_orbit = orbit_of(v, gens);
        }
        std::fill(map_.begin(), map_.end(), kUnset);
        std::fill(inv_.begin(), inv_.end(), kUnset);
      }
    }
    return gens;
  }

 private:
  std::vector<bool> orbit_of(Point v,
                             const std::vector<std::vector<Point>>& gens) const {
    std::vector<bool> seen(order_.size(), false);
    std::vector<Point> queue{v};
    seen[v] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& g : gens)
        if (!seen[g[queue[k]]]) {
          seen[g[queue[k]]] = true;
          queue.push_back(g[queue[k]]);
        }
    return seen;
  }

  bool try_assign(std::size_t pos, std::size_t x, std::size_t y,
                  std::size_t fixed, std::size_t target) {
    if (inv_[y] != kUnset || !problem_.unary_ok(x, y)) return false;
    if (!problem_.extend_ok(map_, order_, pos, x, y)) return false;
    map_[x] = static_cast<std::int64_t>(y);
    inv_[y] = static_cast<std::int64_t>(x);
    if (search(pos + 1, fixed, target)) return true;
    map_[x] = kUnset;
    inv_[y] = kUnset;
    return false;
  }

  // Positions < fixed map to themselves; position `fixed` maps to target.
  bool search(std::size_t pos, std::size_t fixed, std::size_t target) {
    if (pos == order_.size()) return problem_.leaf_ok(map_);
    const std::size_t x = order_[pos];
    if (pos < fixed) return try_assign(pos, x, x, fixed, target);
    if (pos == fixed) return try_assign(pos, x, target, fixed, target);
    for (std::size_t y = 0; y < order_.size(); ++y)
      if (try_assign(pos, x, y, fixed, target)) return true;
    return false;
  }

  const Problem& problem_;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> map_;
  std::vector<std::int64_t> inv_;
};

// Atom-layer search for atomistic lattices. Pairs of atoms must keep the
// rank of their join and the set of already-assigned atoms under it.
class AtomProblem {
 public:
  explicit AtomProblem(const FiniteLattice& l) : l_(l), atoms_(atoms(l)) {
    for (Element x = 0; x < l.size(); ++x)
      element_of_.emplace(atoms_below(l, x), x);
    degree_.resize(atoms_.size());
    for (std::size_t a = 0; a < atoms_.size(); ++a)
      degree_[a] = l.above(atoms_[a]).size();
  }

  std::size_t size() const { return atoms_.size(); }
  std::vector<std::size_t> order() const {
    std::vector<std::size_t> o(atoms_.size());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
    return o;
  }
  bool unary_ok(std::size_t x, std::size_t y) const {
    return degree_[x] == degree_[y];
  }
  bool extend_ok(const std::vector<std::int64_t>& map,
                 const std::vector<std::size_t>& order, std::size_t pos,
                 std::size_t x, std::size_t y) const {
    for (std::size_t t = 0; t < pos; ++t) {
      const std::size_t a = order[t];
      const auto sa = static_cast<std::size_t>(map[a]);
      const Element e = l_.join(atoms_[a], atoms_[x]);
      const Element f = l_.join(atoms_[sa], atoms_[y]);
      if (l_.rank(e) != l_.rank(f) || l_.below(e).size() != l_.below(f).size())
        return false;
      for (std::size_t s = 0; s < pos; ++s) {
        const std::size_t z = order[s];
        const auto sz = static_cast<std::size_t>(map[z]);
        if (l_.leq(atoms_[z], e) != l_.leq(atoms_[sz], f)) return false;
      }
    }
    return true;
  }
  bool leaf_ok(const std::vector<std::int64_t>& map) const {
    for (Element x = 0; x < l_.size(); ++x)
      if (!image_of(map, x)) return false;
    return true;
  }

  std::optional<Element> image_of(const std::vector<std::int64_t>& map,
                                  Element x) const {
    const PointSet a = atoms_below(l_, x);
    PointSet img(a.universe());
    a.for_each([&](Point p) { img.insert(static_cast<Point>(map[p])); });
    auto it = element_of_.find(img);
    if (it == element_of_.end()) return std::nullopt;
    return it->second;
  }

 private:
  const FiniteLattice& l_;
  std::vector<Element> atoms_;
  std::unordered_map<PointSet, Element, PointSetHash> element_of_;
  std::vector<std::size_t> degree_;
};

// Element-wise search, level by level in rank order.
class ElementProblem {
 public:
  explicit ElementProblem(const FiniteLattice& l) : l_(l) {}

  std::size_t size() const { return l_.size(); }
  std::vector<std::size_t> order() const {
    std::vector<std::size_t> o(l_.size());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
    std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) {
      return l_.rank(a) < l_.rank(b);
    });
    return o;
  }
  bool unary_ok(std::size_t x, std::size_t y) const {
    return l_.rank(x) == l_.rank(y) &&
           l_.below(x).size() == l_.below(y).size() &&
           l_.above(x).size() == l_.above(y).size() &&
           l_.upper_covers(x).size() == l_.upper_covers(y).size() &&
           l_.lower_covers(x).size() == l_.lower_covers(y).size();
  }
  bool extend_ok(const std::vector<std::int64_t>& map,
                 const std::vector<std::size_t>& order, std::size_t pos,
                 std::size_t x, std::size_t y) const {
    for (std::size_t t = 0; t < pos; ++t) {
      const std::size_t a = order[t];
      const auto sa = static_cast<std::size_t>(map[a]);
      if (l_.leq(a, x) != l_.leq(sa, y) || l_.leq(x, a) != l_.leq(y, sa))
        return false;
    }
    return true;
  }
  bool leaf_ok(const std::vector<std::int64_t>&) const { return true; }

 private:
  const FiniteLattice& l_;
};

}  // namespace

PermutationGroup lattice_automorphisms(const FiniteLattice& l,
                                       const Caps& caps) {
  if (l.size() > caps.lattice_automorphism_size)
    throw CapacityError("lattice_automorphisms", caps.lattice_automorphism_size,
                        l.size(),
                        "automorphism search on " + std::to_string(l.size()) +
                            " elements exceeds cap " +
                            std::to_string(caps.lattice_automorphism_size));
  std::vector<Permutation> gens;
  if (is_atomistic(l) && !atoms(l).empty()) {
    AtomProblem problem(l);
    CosetSearch<AtomProblem> search(problem);
    for (const auto& atom_perm : search.generators()) {
      std::vector<std::int64_t> map(atom_perm.begin(), atom_perm.end());
      std::vector<Point> img(l.size());
      for (Element x = 0; x < l.size(); ++x)
        img[x] = static_cast<Point>(*problem.image_of(map, x));
      gens.emplace_back(std::move(img));
    }
  } else {
    ElementProblem problem(l);
    CosetSearch<ElementProblem> search(problem);
    for (auto& perm : search.generators()) gens.emplace_back(std::move(perm));
  }
  return PermutationGroup(l.size(), std::move(gens), caps);
}

}  // namespace fixlat
