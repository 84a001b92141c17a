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

#include "fixlat/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "fixlat/error.hpp"

namespace fixlat {

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree) {
  std::vector<Point> base;
  std::vector<bool> in_base(degree, false);
  for (Point b : base_prefix) {
    if (b >= degree) throw ValidationError("base point out of range");
    if (!in_base[b]) {
      in_base[b] = true;
      base.push_back(b);
    }
  }
  std::vector<Permutation> strong;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& g : generators) {
    if (g.is_identity() || !seen.insert(g).second) continue;
    strong.push_back(g);
  }
  for (const auto& s : strong) {
    bool fixes_base = std::all_of(base.begin(), base.end(),
                                  [&](Point b) { return s.fixes(b); });
    if (fixes_base) {
      const Point b = s.first_moved();
      in_base[b] = true;
      base.push_back(b);
    }
  }

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base = base[i];
    for (const auto& s : strong) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j)
        fixes_prefix = s.fixes(base[j]);
      if (fixes_prefix) levels_[i].generators.push_back(s);
    }
    rebuild_orbit(i);
  }

  // Verify every Schreier generator sifts, working from the deepest level.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !extended; ++oi) {
      for (std::size_t si = 0; si < levels_[li].generators.size(); ++si) {
        const Level& lv = levels_[li];
        const Permutation& s = lv.generators[si];
        const Point gamma = s(lv.orbit[oi]);
        const auto& u_gamma = lv.transversal[lv.orbit_index[gamma]];
        Permutation us = lv.transversal[oi] * s;
        if (us == u_gamma) continue;
        Permutation g = us * u_gamma.inverse();
        auto [h, j] = strip(std::move(g), li + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base = h.first_moved();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.orbit_index.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.orbit.push_back(lv.base);
  lv.orbit_index[lv.base] = 0;
  lv.transversal.push_back(Permutation::identity(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const Point x = lv.orbit[k];
    for (const auto& s : lv.generators) {
      const Point y = s(x);
      if (lv.orbit_index[y] >= 0) continue;
      lv.orbit_index[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      lv.transversal.push_back(lv.transversal[k] * s);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(
    Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const Point beta = g(lv.base);
    const auto idx = lv.orbit_index[beta];
    if (idx < 0) return {std::move(g), l};
    if (beta != lv.base) g = g * lv.transversal[idx].inverse();
  }
  return {std::move(g), levels_.size()};
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& lv : levels_) out.push_back(lv.base);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& lv : levels_) n *= lv.orbit.size();
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  auto [h, j] = strip(p, 0);
  return j == levels_.size() && h.is_identity();
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(
    std::size_t depth) const {
  if (depth >= levels_.size()) return {};
  return levels_[depth].generators;
}

StabilizerChain StabilizerChain::tail(std::size_t depth) const {
  StabilizerChain out;
  out.degree_ = degree_;
  if (depth < levels_.size())
    out.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(depth),
                       levels_.end());
  return out;
}

// ---------------------------------------------------------------------------
// PermutationGroup

namespace {

std::uint64_t compute_fingerprint(std::size_t degree,
                                  const std::vector<Permutation>& gens) {
  std::uint64_t h = 0x84222325cbf29ce4ULL ^ degree;
  for (const auto& g : gens) h = (h ^ g.hash()) * 0x100000001b3ULL;
  return h;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   const Caps& caps)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0) throw ValidationError("group degree must be >= 1");
  if (degree > caps.max_degree)
    throw CapacityError("degree", caps.max_degree, degree,
                        "group degree " + std::to_string(degree) +
                            " exceeds cap " + std::to_string(caps.max_degree));
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].degree() != degree)
      throw ValidationError("generator " + std::to_string(i) + " has length " +
                            std::to_string(generators_[i].degree()) +
                            ", expected " + std::to_string(degree));
  chain_ = std::make_shared<const StabilizerChain>(degree, generators_);
  fingerprint_ = compute_fingerprint(degree_, generators_);
}

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   std::shared_ptr<const StabilizerChain> chain)
    : degree_(degree),
      generators_(std::move(generators)),
      chain_(std::move(chain)),
      fingerprint_(compute_fingerprint(degree_, generators_)) {}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup(degree, {});
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw ValidationError("membership test: permutation degree " +
                          std::to_string(p.degree()) + " != group degree " +
                          std::to_string(degree_));
  return chain_->contains(p);
}

PointSet PermutationGroup::orbit(Point x) const {
  if (x >= degree_)
    throw ValidationError("point " + std::to_string(x) + " out of range");
  PointSet seen(degree_);
  std::vector<Point> queue{x};
  seen.insert(x);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : generators_) {
      const Point y = g(queue[k]);
      if (!seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<std::vector<Point>> PermutationGroup::orbits_on(
    const PointSet& within) const {
  std::vector<std::vector<Point>> out;
  PointSet done(degree_);
  within.for_each([&](Point x) {
    if (done.contains(x)) return;
    PointSet o = orbit(x);
    done |= o;
    out.push_back(o.to_vector());
  });
  return out;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  return orbits_on(PointSet::full(degree_));
}

bool PermutationGroup::is_transitive() const {
  return orbit(0).size() == degree_;
}

PermutationGroup PermutationGroup::pointwise_stabilizer(
    const PointSet& points) const {
  if (points.universe() != degree_)
    throw ValidationError("stabilizer: point-set universe " +
                          std::to_string(points.universe()) +
                          " != group degree " + std::to_string(degree_));
  if (points.empty()) return *this;
  const auto prefix = points.to_vector();
  StabilizerChain full_chain(degree_, generators_, prefix);
  auto gens = full_chain.stabilizer_generators(prefix.size());
  auto chain =
      std::make_shared<const StabilizerChain>(full_chain.tail(prefix.size()));
  return PermutationGroup(degree_, std::move(gens), std::move(chain));
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (other.degree_ != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermutationGroup::same_group_as(const PermutationGroup& other) const {
  return is_subgroup_of(other) && other.is_subgroup_of(*this);
}

std::size_t PermutationGroup::transitivity_degree(std::size_t k_max) const {
  // G is k-transitive iff G is transitive and the stabilizer of one point is
  // (k-1)-transitive on the rest.
  std::size_t k = 0;
  PermutationGroup current = *this;
  PointSet fixed(degree_);
  while (k < k_max && k < degree_) {
    const PointSet remaining = fixed.complement();
    const Point x = remaining.first();
    if (current.orbit(x) != remaining) break;
    ++k;
    fixed.insert(x);
    if (k < k_max && k < degree_) current = pointwise_stabilizer(fixed);
  }
  return k;
}

namespace {

// Minimal block containing {0, seed}: union-find closed under the
// generators.
std::vector<std::vector<Point>> minimal_block_system(
    std::size_t n, const std::vector<Permutation>& gens, Point seed) {
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Point a, Point b) {
    if (a < b) std::swap(a, b);
    parent[a] = b;
  };
  std::deque<std::pair<Point, Point>> queue;
  unite(find(0), find(seed));
  queue.emplace_back(0, seed);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const Point a = find(g(x)), b = find(g(y));
      if (a != b) {
        unite(a, b);
        queue.emplace_back(a, b);
      }
    }
  }
  std::vector<std::vector<Point>> blocks;
  std::vector<std::int64_t> block_of(n, -1);
  for (Point x = 0; x < n; ++x) {
    const Point r = find(x);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<std::int64_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(block_of[r])].push_back(x);
  }
  return blocks;
}

}  // namespace

Primitivity PermutationGroup::primitivity() const {
  if (!is_transitive())
    throw PreconditionError("primitivity requires a transitive group");
  Primitivity result;
  std::optional<std::vector<std::vector<Point>>> best;
  for (Point b = 1; b < degree_; ++b) {
    auto system = minimal_block_system(degree_, generators_, b);
    if (system.size() == 1) continue;
    if (!best || system[0].size() < (*best)[0].size() ||
        (system[0].size() == (*best)[0].size() && system < *best))
      best = std::move(system);
  }
  if (best) {
    result.primitive = false;
    result.block_system = std::move(best);
  }
  return result;
}

GroupAction::GroupAction(PermutationGroup g,
                         std::vector<std::string> point_labels)
    : group(std::move(g)), labels(std::move(point_labels)) {
  if (!labels.empty() && labels.size() != group.degree())
    throw ValidationError("label count " + std::to_string(labels.size()) +
                          " != degree " + std::to_string(group.degree()));
}

// ---------------------------------------------------------------------------
// Families

namespace {

Permutation cycle_on(std::size_t degree, const std::vector<Point>& cycle) {
  auto img = Permutation::identity(degree).images();
  for (std::size_t i = 0; i < cycle.size(); ++i)
    img[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(img));
}

}  // namespace

PermutationGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(cycle_on(n, {0, 1}));
    std::vector<Point> all(n);
    std::iota(all.begin(), all.end(), Point{0});
    if (n >= 3) gens.push_back(cycle_on(n, all));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup alternating_group(std::size_t n) {
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(cycle_on(n, {0, 1, k}));
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup cyclic_group(std::size_t n) {
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_on(n, all));
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup dihedral_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<Point> all(n);
    std::iota(all.begin(), all.end(), Point{0});
    gens.push_back(cycle_on(n, all));
    std::vector<Point> refl(n);
    for (std::size_t i = 0; i < n; ++i)
      refl[i] = static_cast<Point>((n - i) % n);
    gens.emplace_back(std::move(refl));
  }
  return PermutationGroup(n, std::move(gens));
}

}  // namespace fixlat
