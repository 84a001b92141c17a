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

#include "fixlat/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fixlat/error.hpp"

namespace fixlat {

std::string LatticeViolation::describe() const {
  const std::string pair =
      "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
  switch (kind) {
    case Kind::kEmpty:
      return "lattice has no elements";
    case Kind::kNotReflexive:
      return "not reflexive at " + std::to_string(a);
    case Kind::kNotAntisymmetric:
      return "not antisymmetric: " + pair + " are mutually below";
    case Kind::kNotTransitive:
      return "not transitive: order missing " + pair;
    case Kind::kNoMeet:
      return "no meet for pair " + pair;
    case Kind::kNoJoin:
      return "no join for pair " + pair;
  }
  return "unknown violation";
}

LatticeValidation lattice_validate(std::size_t size,
                                   const std::vector<std::vector<bool>>& leq,
                                   std::vector<std::string> labels) {
  using Kind = LatticeViolation::Kind;
  LatticeValidation result;
  if (size == 0) {
    result.violations.push_back({Kind::kEmpty, 0, 0});
    return result;
  }
  if (size > FiniteLattice::kMaxSize)
    throw CapacityError("lattice_elements", FiniteLattice::kMaxSize, size,
                        "explicit lattice of " + std::to_string(size) +
                            " elements exceeds cap " +
                            std::to_string(FiniteLattice::kMaxSize));
  if (leq.size() != size)
    throw ValidationError("order relation has " + std::to_string(leq.size()) +
                          " rows, expected " + std::to_string(size));
  for (const auto& row : leq)
    if (row.size() != size)
      throw ValidationError("order relation row has wrong length");
  if (!labels.empty() && labels.size() != size)
    throw ValidationError("label count does not match lattice size");

  std::vector<PointSet> below(size, PointSet(size));
  std::vector<PointSet> above(size, PointSet(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (leq[i][j]) {
        below[j].insert(static_cast<Point>(i));
        above[i].insert(static_cast<Point>(j));
      }

  for (std::size_t i = 0; i < size; ++i)
    if (!leq[i][i]) result.violations.push_back({Kind::kNotReflexive, i, i});
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (leq[i][j] && leq[j][i])
        result.violations.push_back({Kind::kNotAntisymmetric, i, j});
  for (std::size_t j = 0; j < size; ++j)
    below[j].for_each([&](Point i) {
      below[i].for_each([&](Point h) {
        if (!leq[h][j]) result.violations.push_back({Kind::kNotTransitive, h, j});
      });
    });
  if (!result.violations.empty()) return result;

  std::vector<std::uint32_t> meet(size * size), join(size * size);
  auto greatest_in = [&](const PointSet& bounds,
                         const std::vector<PointSet>& cone)
      -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    std::size_t best_size = 0;
    bounds.for_each([&](Point m) {
      const auto sz = cone[m].size();
      if (!best || sz > best_size) {
        best = m;
        best_size = sz;
      }
    });
    if (best && cone[*best] == bounds) return best;
    return std::nullopt;
  };
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      auto m = greatest_in(below[a] & below[b], below);
      auto j = greatest_in(above[a] & above[b], above);
      if (!m) result.violations.push_back({Kind::kNoMeet, a, b});
      if (!j) result.violations.push_back({Kind::kNoJoin, a, b});
      if (m) meet[a * size + b] = meet[b * size + a] = static_cast<std::uint32_t>(*m);
      if (j) join[a * size + b] = join[b * size + a] = static_cast<std::uint32_t>(*j);
    }
  }
  if (!result.violations.empty()) return result;

  FiniteLattice l;
  l.size_ = size;
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.labels_ = std::move(labels);
  l.upper_covers_.resize(size);
  l.lower_covers_.resize(size);
  for (std::size_t a = 0; a < size; ++a) {
    above[a].for_each([&](Point b) {
      if (b == a) return;
      const PointSet between = above[a] & below[b];
      if (between.size() == 2) {
        l.upper_covers_[a].push_back(b);
        l.lower_covers_[b].push_back(a);
      }
    });
  }
  std::vector<std::size_t> by_height(size);
  std::iota(by_height.begin(), by_height.end(), std::size_t{0});
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](std::size_t x, std::size_t y) {
                     return below[x].size() < below[y].size();
                   });
  l.rank_.assign(size, 0);
  for (std::size_t x : by_height)
    for (std::size_t c : l.lower_covers_[x])
      l.rank_[x] = std::max(l.rank_[x], l.rank_[c] + 1);
  l.bottom_ = by_height.front();
  l.top_ = by_height.back();
  l.below_ = std::move(below);
  l.above_ = std::move(above);
  result.lattice = std::move(l);
  return result;
}

FiniteLattice FiniteLattice::from_leq(std::vector<std::vector<bool>> leq,
                                      std::vector<std::string> labels) {
  const std::size_t n = leq.size();
  auto v = lattice_validate(n, leq, std::move(labels));
  if (!v.valid()) {
    std::string msg = "not a lattice:";
    for (std::size_t i = 0; i < v.violations.size() && i < 5; ++i)
      msg += " " + v.violations[i].describe() + ";";
    throw ValidationError(msg);
  }
  return std::move(*v.lattice);
}

FiniteLattice FiniteLattice::from_covers(
    std::size_t size, std::span<const std::pair<Element, Element>> covers,
    std::vector<std::string> labels) {
  std::vector<std::vector<Element>> up(size);
  for (auto [lo, hi] : covers) {
    if (lo >= size || hi >= size)
      throw ValidationError("cover pair (" + std::to_string(lo) + ", " +
                            std::to_string(hi) + ") out of range");
    up[lo].push_back(hi);
  }
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<Element> stack{i};
    leq[i][i] = true;
    while (!stack.empty()) {
      const Element x = stack.back();
      stack.pop_back();
      for (Element y : up[x])
        if (!leq[i][y]) {
          leq[i][y] = true;
          stack.push_back(y);
        }
    }
  }
  return from_leq(std::move(leq), std::move(labels));
}

std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size_; ++a)
    for (Element b : upper_covers_[a]) out.emplace_back(a, b);
  return out;
}

std::string FiniteLattice::label(Element l) const {
  return labels_.empty() ? std::to_string(l) : labels_[l];
}

Element meet(const FiniteLattice& l, std::span<const Element> s) {
  if (s.empty()) throw PreconditionError("meet of an empty set");
  Element m = s[0];
  for (Element x : s) m = l.meet(m, x);
  return m;
}

Element join(const FiniteLattice& l, std::span<const Element> s) {
  if (s.empty()) throw PreconditionError("join of an empty set");
  Element j = s[0];
  for (Element x : s) j = l.join(j, x);
  return j;
}

std::vector<Element> atoms(const FiniteLattice& l) {
  auto out = l.upper_covers(l.bottom());
  std::sort(out.begin(), out.end());
  return out;
}

PointSet atoms_below(const FiniteLattice& l, Element x) {
  const auto at = atoms(l);
  PointSet out(at.size());
  for (std::size_t i = 0; i < at.size(); ++i)
    if (l.leq(at[i], x)) out.insert(static_cast<Point>(i));
  return out;
}

bool is_atomistic(const FiniteLattice& l) {
  const auto at = atoms(l);
  for (Element x = 0; x < l.size(); ++x) {
    Element j = l.bottom();
    for (Element a : at)
      if (l.leq(a, x)) j = l.join(j, a);
    if (j != x) return false;
  }
  return true;
}

std::vector<Element> lower_cone(const FiniteLattice& l, Element x) {
  std::vector<Element> out;
  l.below(x).for_each([&](Point p) { out.push_back(p); });
  return out;
}

ConditionS condition_S(const FiniteLattice& l, const PermutationGroup& aut) {
  if (aut.degree() != l.size())
    throw ValidationError("automorphism group degree != lattice size");
  std::vector<PermutationGroup> stab;
  std::vector<BigInt> orders;
  stab.reserve(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    stab.push_back(aut.pointwise_stabilizer(l.below(x)));
    orders.push_back(stab.back().order());
  }
  ConditionS result;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a + 1; b < l.size(); ++b)
      if (orders[a] == orders[b] && stab[a].same_group_as(stab[b])) {
        result.holds = false;
        result.witness = std::make_pair(a, b);
        return result;
      }
  return result;
}

ConditionS condition_S(const FiniteLattice& l, const Caps& caps) {
  return condition_S(l, lattice_automorphisms(l, caps));
}

ReconstructionResult reconstruct(const FiniteLattice& l, const Caps& caps) {
  if (!is_atomistic(l))
    throw PreconditionError("reconstruct: lattice is not atomistic");
  const auto at = atoms(l);
  if (at.empty())
    throw PreconditionError("reconstruct: lattice has no atoms");
  const PermutationGroup aut = lattice_automorphisms(l, caps);
  const ConditionS cs = condition_S(l, aut);
  if (!cs.holds)
    throw PreconditionError(
        "reconstruct: condition (S) fails for elements " +
        std::to_string(cs.witness->first) + " and " +
        std::to_string(cs.witness->second));

  std::vector<std::int64_t> atom_index(l.size(), -1);
  for (std::size_t i = 0; i < at.size(); ++i)
    atom_index[at[i]] = static_cast<std::int64_t>(i);
  std::vector<Permutation> gens;
  for (const auto& g : aut.generators()) {
    std::vector<Point> img(at.size());
    for (std::size_t i = 0; i < at.size(); ++i)
      img[i] = static_cast<Point>(atom_index[g(static_cast<Point>(at[i]))]);
    gens.emplace_back(std::move(img));
  }
  std::vector<std::string> labels;
  if (!l.labels().empty())
    for (Element a : at) labels.push_back(l.label(a));

  ReconstructionResult r{
      GroupAction(PermutationGroup(at.size(), std::move(gens), caps),
                  std::move(labels)),
      at, {}, {}, {}, {}, false, false, false, std::nullopt};
  const PermutationGroup& g = r.atom_action.group;
  r.fixset_lattice = enumerate_fixset_lattice(g, caps);
  const auto& fix = r.fixset_lattice;

  ClosureOperator close(g);
  r.rho.resize(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    auto idx = fix.index_of(close(atoms_below(l, x)));
    if (!idx) throw InternalError("reconstruct: rho value is not a fixset");
    r.rho[x] = *idx;
  }
  r.rho_image = r.rho;
  std::sort(r.rho_image.begin(), r.rho_image.end());
  r.rho_image.erase(std::unique(r.rho_image.begin(), r.rho_image.end()),
                    r.rho_image.end());
  r.rho_injective = r.rho_image.size() == l.size();
  r.rho_order_embedding = true;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (l.leq(x, y) != fix[r.rho[x]].is_subset_of(fix[r.rho[y]]))
        r.rho_order_embedding = false;

  r.cl.resize(fix.size());
  for (std::size_t d = 0; d < fix.size(); ++d) {
    PointSet m = PointSet::full(fix.universe());
    for (std::size_t img : r.rho_image)
      if (fix[d].is_subset_of(fix[img])) m &= fix[img];
    auto idx = fix.index_of(m);
    if (!idx) throw InternalError("reconstruct: cl value is not a fixset");
    r.cl[d] = *idx;
  }
  r.cl_trivial = r.rho_image.size() == fix.size();
  if (r.cl_trivial) r.iso = r.rho;
  return r;
}

bool is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return false;
  return true;
}

bool is_complemented(const FiniteLattice& l) {
  for (Element x = 0; x < l.size(); ++x) {
    bool found = false;
    for (Element y = 0; y < l.size() && !found; ++y)
      found = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    if (!found) return false;
  }
  return true;
}

StoneRepresentation stone_ultrafilters(const FiniteLattice& l) {
  if (!is_distributive(l))
    throw PreconditionError("stone_ultrafilters: lattice is not distributive");
  if (!is_complemented(l))
    throw PreconditionError("stone_ultrafilters: lattice is not complemented");
  // Every filter of a finite lattice is principal; proper ones are the upper
  // cones of non-bottom elements. Keep the inclusion-maximal ones.
  std::vector<PointSet> proper;
  for (Element x = 0; x < l.size(); ++x)
    if (x != l.bottom()) proper.push_back(l.above(x));
  StoneRepresentation rep;
  for (const auto& f : proper) {
    bool maximal = true;
    for (const auto& g : proper)
      if (f != g && f.is_subset_of(g)) maximal = false;
    if (maximal) rep.ultrafilters.push_back(f);
  }
  rep.u_map.assign(l.size(), PointSet(rep.ultrafilters.size()));
  for (std::size_t i = 0; i < rep.ultrafilters.size(); ++i)
    rep.ultrafilters[i].for_each(
        [&](Point x) { rep.u_map[x].insert(static_cast<Point>(i)); });
  rep.injective = true;
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = a + 1; b < l.size(); ++b)
      if (rep.u_map[a] == rep.u_map[b]) rep.injective = false;
  return rep;
}

FiniteLattice chain_lattice(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  return FiniteLattice::from_leq(std::move(leq));
}

FiniteLattice m_lattice(std::size_t n) {
  const std::size_t size = n + 2;
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) {
    leq[i][i] = true;
    leq[0][i] = true;
    leq[i][size - 1] = true;
  }
  return FiniteLattice::from_leq(std::move(leq));
}

FiniteLattice boolean_lattice(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) leq[i][j] = (i & ~j) == 0;
  return FiniteLattice::from_leq(std::move(leq));
}

}  // namespace fixlat
