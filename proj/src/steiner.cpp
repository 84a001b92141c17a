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

#include "fixlat/steiner.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "fixlat/closure.hpp"
#include "fixlat/error.hpp"
#include "fixlat/geometry.hpp"

namespace fixlat {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Combinatorial number system rank of a sorted subset.
std::uint64_t subset_rank(std::span<const Point> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    r += binomial(sorted[i], i + 1);
  return r;
}

// Calls f on every k-subset (as a sorted vector) of the sorted `items`.
template <typename F>
void for_each_subset(const std::vector<Point>& items, std::size_t k, F&& f) {
  if (k > items.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Point> cur(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) cur[i] = items[idx[i]];
    f(cur);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Point> unrank_subset(std::uint64_t rank, std::size_t k) {
  std::vector<Point> out(k);
  for (std::size_t i = k; i > 0; --i) {
    Point c = static_cast<Point>(i - 1);
    while (binomial(c + 1, i) <= rank) ++c;
    out[i - 1] = c;
    rank -= binomial(c, i);
  }
  return out;
}

}  // namespace

void SteinerSystem::normalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

std::string SteinerViolation::describe() const {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i)
    s += (i ? "," : "") + std::to_string(subset[i]);
  s += "}";
  switch (kind) {
    case Kind::kPointOutOfRange:
      return "block " + s + " has a point out of range";
    case Kind::kRepeatedPoint:
      return "block " + s + " repeats a point";
    case Kind::kUnequalBlockSize:
      return "block " + s + " has a different size";
    case Kind::kDegenerate:
      return "degenerate system: need k < block size < points";
    case Kind::kUncovered:
      return "subset " + s + " lies in no block";
    case Kind::kMultiplyCovered:
      return "subset " + s + " lies in " + std::to_string(count) + " blocks";
  }
  return "unknown violation";
}

SteinerVerification verify_steiner(const SteinerSystem& sys, const Caps& caps) {
  using Kind = SteinerViolation::Kind;
  SteinerVerification out;
  auto add = [&](Kind kind, std::vector<Point> subset, std::size_t count = 0) {
    out.valid = false;
    out.violations.push_back({kind, std::move(subset), count});
  };
  if (sys.num_points > caps.steiner_points)
    throw CapacityError("points", caps.steiner_points, sys.num_points,
                        "exhaustive Steiner verification capped at " +
                            std::to_string(caps.steiner_points) + " points");
  const std::size_t bs = sys.block_size();
  for (const auto& b : sys.blocks) {
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.back() >= sys.num_points)
      add(Kind::kPointOutOfRange, b);
    else if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      add(Kind::kRepeatedPoint, b);
    else if (b.size() != bs)
      add(Kind::kUnequalBlockSize, b);
  }
  if (!out.valid) return out;
  if (sys.k < 1 || bs <= sys.k || sys.num_points <= bs) {
    add(Kind::kDegenerate, {});
    return out;
  }
  const std::uint64_t subsets = binomial(sys.num_points, sys.k);
  if (subsets > 50'000'000)
    throw CapacityError("k_subsets", 50'000'000, subsets,
                        "too many k-subsets to verify exhaustively");
  std::vector<std::uint32_t> count(subsets, 0);
  for (const auto& b : sys.blocks) {
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for_each_subset(sorted, sys.k,
                    [&](const std::vector<Point>& s) { ++count[subset_rank(s)]; });
  }
  for (std::uint64_t r = 0; r < subsets; ++r) {
    if (count[r] == 0) add(Kind::kUncovered, unrank_subset(r, sys.k));
    else if (count[r] > 1)
      add(Kind::kMultiplyCovered, unrank_subset(r, sys.k), count[r]);
  }
  return out;
}

bool satisfies_counting_identity(const SteinerSystem& sys) {
  return sys.blocks.size() * binomial(sys.block_size(), sys.k) ==
         binomial(sys.num_points, sys.k);
}

SteinerSystem steiner_from_projective(std::uint32_t q, std::size_t d) {
  if (d < 2) throw ValidationError("projective Steiner system needs d >= 2");
  const ProjectiveSpace space(q, d);
  const std::size_t n = space.num_points();
  std::set<std::vector<Point>> lines;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      lines.insert(span_closure(space, PointSet(n, {a, b})).to_vector());
  SteinerSystem sys{2, n, {lines.begin(), lines.end()}};
  return sys;
}

namespace {

struct AffineSpace {
  PrimeField field;
  std::size_t d;
  std::size_t n;

  AffineSpace(std::uint32_t q, std::size_t dim) : field(q), d(dim), n(1) {
    if (dim < 2) throw ValidationError("affine Steiner system needs d >= 2");
    for (std::size_t i = 0; i < d; ++i) n *= q;
  }
  Vector coords(Point x) const {
    Vector v(d);
    for (std::size_t i = d; i-- > 0;) {
      v[i] = x % field.order();
      x /= field.order();
    }
    return v;
  }
  Point index(const Vector& v) const {
    Point x = 0;
    for (auto c : v) x = x * field.order() + c;
    return x;
  }
  // a + s*u + t*v
  Point combine(const Vector& a, PrimeField::Scalar s, const Vector& u,
                PrimeField::Scalar t, const Vector& v) const {
    Vector w(d);
    for (std::size_t i = 0; i < d; ++i)
      w[i] = field.add(a[i], field.add(field.mul(s, u[i]), field.mul(t, v[i])));
    return index(w);
  }
  Vector diff(const Vector& b, const Vector& a) const {
    Vector w(d);
    for (std::size_t i = 0; i < d; ++i) w[i] = field.sub(b[i], a[i]);
    return w;
  }
};

}  // namespace

SteinerSystem steiner_from_affine(std::uint32_t q, std::size_t d) {
  // Lines of AG(d,2) are point pairs, which is not a proper 2-system.
  if (q == 2)
    throw ValidationError(
        "steiner_from_affine: q = 2 gives 2-point lines; use affine planes");
  const AffineSpace ag(q, d);
  if (ag.n > 4096) throw CapacityError("points", 4096, ag.n, "AG too large");
  std::set<std::vector<Point>> lines;
  const Vector zero(d, 0);
  for (Point a = 0; a < ag.n; ++a) {
    const auto va = ag.coords(a);
    for (Point b = a + 1; b < ag.n; ++b) {
      const auto dir = ag.diff(ag.coords(b), va);
      std::vector<Point> line;
      for (PrimeField::Scalar t = 0; t < q; ++t)
        line.push_back(ag.combine(va, t, dir, 0, zero));
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  return SteinerSystem{2, ag.n, {lines.begin(), lines.end()}};
}

SteinerSystem steiner_from_affine_planes(std::size_t d) {
  const AffineSpace ag(2, d);
  if (d < 3) throw ValidationError("affine plane system needs d >= 3");
  if (ag.n > 4096) throw CapacityError("points", 4096, ag.n, "AG too large");
  std::set<std::vector<Point>> planes;
  for (Point a = 0; a < ag.n; ++a)
    for (Point b = a + 1; b < ag.n; ++b)
      for (Point c = b + 1; c < ag.n; ++c) {
        // Over GF(2) any three distinct points span the plane {a,b,c,a+b+c}.
        std::vector<Point> plane{a, b, c, static_cast<Point>(a ^ b ^ c)};
        std::sort(plane.begin(), plane.end());
        planes.insert(std::move(plane));
      }
  return SteinerSystem{3, ag.n, {planes.begin(), planes.end()}};
}

SteinerSystem derivation(const SteinerSystem& sys, Point p) {
  if (sys.k < 3)
    throw PreconditionError("derivation requires k >= 3, got k = " +
                            std::to_string(sys.k));
  if (p >= sys.num_points)
    throw ValidationError("derivation point " + std::to_string(p) +
                          " out of range");
  SteinerSystem out{sys.k - 1, sys.num_points - 1, {}};
  for (const auto& b : sys.blocks) {
    if (std::find(b.begin(), b.end(), p) == b.end()) continue;
    std::vector<Point> nb;
    for (Point x : b)
      if (x != p) nb.push_back(x > p ? x - 1 : x);
    out.blocks.push_back(std::move(nb));
  }
  out.normalize();
  const auto v = verify_steiner(out);
  if (!v.valid)
    throw InternalError("derived system is not a Steiner system: " +
                        v.violations.front().describe());
  return out;
}

std::optional<std::vector<Point>> steiner_isomorphism(const SteinerSystem& a,
                                                      const SteinerSystem& b,
                                                      const Caps& caps) {
  if (a.num_points > caps.steiner_points)
    throw CapacityError("points", caps.steiner_points, a.num_points,
                        "isomorphism search capped");
  if (a.k != b.k || a.num_points != b.num_points ||
      a.blocks.size() != b.blocks.size() || a.block_size() != b.block_size())
    return std::nullopt;
  const std::size_t n = a.num_points, k = a.k;
  std::vector<std::size_t> deg_a(n, 0), deg_b(n, 0);
  std::vector<std::vector<std::size_t>> blocks_of(n);
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    for (Point x : a.blocks[i]) {
      ++deg_a[x];
      blocks_of[x].push_back(i);
    }
  for (const auto& bl : b.blocks)
    for (Point x : bl) ++deg_b[x];
  // k-subset of b -> block containing it.
  std::unordered_map<std::uint64_t, std::size_t> block_b;
  std::vector<PointSet> set_b;
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    set_b.emplace_back(n, std::span<const Point>(b.blocks[i]));
    auto sorted = b.blocks[i];
    std::sort(sorted.begin(), sorted.end());
    for_each_subset(sorted, k, [&](const std::vector<Point>& s) {
      block_b.emplace(subset_rank(s), i);
    });
  }

  std::vector<std::int64_t> map(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](Point x) {
    for (std::size_t bi : blocks_of[x]) {
      std::vector<Point> img;
      for (Point z : a.blocks[bi])
        if (map[z] >= 0) img.push_back(static_cast<Point>(map[z]));
      if (img.size() < k) continue;
      std::sort(img.begin(), img.end());
      auto it = block_b.find(subset_rank(std::span<const Point>(img).first(k)));
      if (it == block_b.end()) return false;
      for (Point z : img)
        if (!set_b[it->second].contains(z)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Point x) -> bool {
    if (x == n) return true;
    for (Point y = 0; y < n; ++y) {
      if (used[y] || deg_a[x] != deg_b[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && self(self, x + 1)) return true;
      map[x] = -1;
      used[y] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Point>(map[i]);
  return out;
}

JordanReport jordan_report(const PermutationGroup& g, std::size_t k_max,
                           const Caps& caps) {
  JordanReport r;
  const auto lattice = enumerate_fixset_lattice(g, caps);
  for (const auto& f : lattice.elements()) {
    if (f.empty() || f.is_full()) continue;
    JordanEntry e;
    e.fixset = f;
    e.complement_orbits = g.pointwise_stabilizer(f).orbits_on(f.complement());
    e.jordan = e.complement_orbits.size() == 1;
    if (!e.jordan && !r.first_failure) r.first_failure = r.entries.size();
    r.condition_T = r.condition_T && e.jordan;
    r.entries.push_back(std::move(e));
  }
  r.transitivity_degree = g.transitivity_degree(k_max);
  return r;
}

AutomorphismCheck steiner_automorphism_check(const SteinerSystem& sys,
                                             const PermutationGroup& g) {
  if (g.degree() != sys.num_points)
    throw ValidationError("group degree " + std::to_string(g.degree()) +
                          " != number of points " +
                          std::to_string(sys.num_points));
  std::set<std::vector<Point>> blocks;
  for (auto b : sys.blocks) {
    std::sort(b.begin(), b.end());
    blocks.insert(std::move(b));
  }
  AutomorphismCheck out;
  for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
    const auto& gen = g.generators()[gi];
    for (const auto& b : blocks) {
      std::vector<Point> img;
      for (Point x : b) img.push_back(gen(x));
      std::sort(img.begin(), img.end());
      if (!blocks.contains(img)) {
        out.preserves_blocks = false;
        out.generator = gi;
        out.block = b;
        return out;
      }
    }
  }
  return out;
}

BlockStabilization block_pointwise_stabilization(const SteinerSystem& sys,
                                                 const PermutationGroup& g) {
  if (g.degree() != sys.num_points)
    throw ValidationError("group degree does not match the system");
  BlockStabilization out;
  ClosureOperator close(g);
  for (const auto& b : sys.blocks) {
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    const PointSet block(sys.num_points, std::span<const Point>(sorted));
    bool ok = true;
    for_each_subset(sorted, sys.k, [&](const std::vector<Point>& s) {
      if (!ok) return;
      const PointSet sub(sys.num_points, std::span<const Point>(s));
      if (!block.is_subset_of(close(sub))) {
        ok = false;
        out.pointwise = false;
        out.block = sorted;
        out.subset = s;
      }
    });
    if (!ok) return out;
  }
  return out;
}

}  // namespace fixlat
