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

#include "fixlat/fol.hpp"

#include <algorithm>
#include <random>
#include <functional>
#include <unordered_map>

#include "fixlat/closure.hpp"
#include "fixlat/error.hpp"

namespace fixlat {

namespace {

// Key of a tuple with one slot blanked: (relation, slot) and the remaining
// coordinates packed in 16-bit digits.
using SlotKey = std::pair<std::uint64_t, std::uint64_t>;

struct SlotKeyHash {
  std::size_t operator()(const SlotKey& k) const {
    return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^
                                      k.second);
  }
};

SlotKey slot_key(std::size_t relation, std::size_t slot, const Tuple& t) {
  std::uint64_t coords = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != slot) coords = (coords << 16) | t[i];
  return {relation * 8 + slot, coords};
}

}  // namespace

RelationalStructure::RelationalStructure(
    std::size_t domain_size, std::size_t max_arity,
    std::map<std::size_t, std::vector<Relation>> relations)
    : domain_size_(domain_size),
      max_arity_(max_arity),
      relations_(std::move(relations)) {
  for (const auto& [arity, rels] : relations_) {
    if (arity > 5)
      throw CapacityError("arity", 5, arity, "arity too large to index");
    std::unordered_map<SlotKey, std::uint32_t, SlotKeyHash> completions;
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (const auto& t : rels[r].tuples)
        for (std::size_t s = 0; s < arity; ++s) ++completions[slot_key(r, s, t)];
    for (std::size_t r = 0; r < rels.size(); ++r)
      for (const auto& t : rels[r].tuples)
        for (std::size_t s = 0; s < arity; ++s) {
          if (completions[slot_key(r, s, t)] != 1) continue;
          Rule rule{{}, t[s], arity};
          for (std::size_t i = 0; i < arity; ++i)
            if (i != s) rule.premises.push_back(t[i]);
          std::sort(rule.premises.begin(), rule.premises.end());
          rules_.push_back(std::move(rule));
        }
  }
}

const std::vector<Relation>& RelationalStructure::relations(
    std::size_t arity) const {
  static const std::vector<Relation> kNone;
  auto it = relations_.find(arity);
  return it == relations_.end() ? kNone : it->second;
}

RelationalStructure canonical_structure(const PermutationGroup& g,
                                        std::size_t max_arity,
                                        const Caps& caps) {
  if (max_arity < 2) throw ValidationError("max_arity must be >= 2");
  if (max_arity > caps.max_arity)
    throw CapacityError("arity", caps.max_arity, max_arity,
                        "arity " + std::to_string(max_arity) +
                            " exceeds cap " + std::to_string(caps.max_arity));
  const std::size_t n = g.degree();
  if (n >= (1u << 16))
    throw CapacityError("degree", 1u << 16, n, "degree too large for tuples");
  std::map<std::size_t, std::vector<Relation>> relations;
  for (std::size_t arity = 2; arity <= max_arity; ++arity) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      space *= n;
      if (space > caps.tuple_count)
        throw CapacityError("tuples", caps.tuple_count, space,
                            "tuple space of arity " + std::to_string(arity) +
                                " exceeds cap " +
                                std::to_string(caps.tuple_count));
    }
    auto encode = [&](const Tuple& t) {
      std::uint64_t c = 0;
      for (Point x : t) c = c * n + x;
      return c;
    };
    std::vector<bool> seen(space, false);
    std::vector<Relation> rels;
    Tuple t(arity);
    for (std::uint64_t code = 0; code < space; ++code) {
      if (seen[code]) continue;
      std::uint64_t c = code;
      for (std::size_t i = arity; i-- > 0;) {
        t[i] = static_cast<Point>(c % n);
        c /= n;
      }
      std::vector<Point> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;
      Relation rel{arity, {t}};
      seen[code] = true;
      for (std::size_t k = 0; k < rel.tuples.size(); ++k) {
        for (const auto& gen : g.generators()) {
          Tuple img(arity);
          for (std::size_t i = 0; i < arity; ++i) img[i] = gen(rel.tuples[k][i]);
          const auto ic = encode(img);
          if (!seen[ic]) {
            seen[ic] = true;
            rel.tuples.push_back(std::move(img));
          }
        }
      }
      std::sort(rel.tuples.begin(), rel.tuples.end());
      rels.push_back(std::move(rel));
    }
    relations.emplace(arity, std::move(rels));
  }
  return RelationalStructure(n, max_arity, std::move(relations));
}

PointSet relational_dcl(const RelationalStructure& s, const PointSet& x,
                        std::size_t max_arity) {
  if (x.universe() != s.domain_size())
    throw ValidationError("point set universe does not match the structure");
  PointSet out = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : s.rules()) {
      if (rule.arity > max_arity || out.contains(rule.conclusion)) continue;
      if (std::all_of(rule.premises.begin(), rule.premises.end(),
                      [&](Point p) { return out.contains(p); })) {
        out.insert(rule.conclusion);
        changed = true;
      }
    }
  }
  return out;
}

PointSet relational_dcl(const RelationalStructure& s, const PointSet& x) {
  return relational_dcl(s, x, s.max_arity());
}

DclReport dcl_vs_fixset_report(const PermutationGroup& g, std::size_t max_arity,
                               std::uint64_t seed, std::size_t samples,
                               const Caps& caps) {
  const std::size_t n = g.degree();
  const auto structure = canonical_structure(g, max_arity, caps);
  DclReport r;
  r.max_arity = max_arity;
  r.seed = seed;

  std::vector<PointSet> subsets;
  if (n <= 12) {
    r.exhaustive = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      subsets.push_back(PointSet::from_mask(n, m));
  } else {
    subsets.emplace_back(n);
    for (Point a = 0; a < n; ++a) {
      subsets.push_back(PointSet(n, {a}));
      for (Point b = a + 1; b < n; ++b) subsets.push_back(PointSet(n, {a, b}));
    }
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < samples; ++i) {
      PointSet s(n);
      for (Point a = 0; a < n; ++a)
        if (coin(rng)) s.insert(a);
      subsets.push_back(std::move(s));
    }
  }

  ClosureOperator close(g);
  std::vector<PointSet> fix;
  fix.reserve(subsets.size());
  for (const auto& x : subsets) fix.push_back(close(x));

  for (std::size_t a = 2; a <= max_arity; ++a) {
    bool all = true;
    for (std::size_t i = 0; i < subsets.size() && all; ++i)
      all = relational_dcl(structure, subsets[i], a) == fix[i];
    if (all) {
      r.minimal_sufficient_arity = a;
      break;
    }
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const PointSet d = relational_dcl(structure, subsets[i]);
    ++r.tested;
    if (!d.is_subset_of(fix[i])) r.sound = false;
    if (d == fix[i]) {
      ++r.agreements;
    } else {
      r.disagreements.push_back({subsets[i], d, fix[i]});
    }
  }
  return r;
}

}  // namespace fixlat
