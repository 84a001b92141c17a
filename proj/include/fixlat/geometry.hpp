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

#ifndef FIXLAT_GEOMETRY_HPP_
#define FIXLAT_GEOMETRY_HPP_

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fixlat/config.hpp"
#include "fixlat/perm_group.hpp"
#include "fixlat/point_set.hpp"
#include "fixlat/set_lattice.hpp"

namespace fixlat {

bool is_prime(std::uint64_t n);

// Arithmetic over GF(p), p prime, with a precomputed inverse table.
class PrimeField {
 public:
  using Scalar = std::uint32_t;

  // Throws ValidationError for non-prime or oversized p.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t order() const { return p_; }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar neg(Scalar a) const { return (p_ - a) % p_; }
  Scalar inv(Scalar a) const { return inverse_[a]; }
  // Smallest generator of the multiplicative group.
  Scalar primitive_root() const { return primitive_root_; }

 private:
  std::uint32_t p_;
  std::vector<Scalar> inverse_;
  Scalar primitive_root_ = 1;
};

using Vector = std::vector<PrimeField::Scalar>;
using Matrix = std::vector<Vector>;  // row-major, square

// Normalized representative: first nonzero coordinate is 1.
struct ProjectivePoint {
  Vector coords;
  friend bool operator==(const ProjectivePoint&,
                         const ProjectivePoint&) = default;
};

// PG(d, p): points numbered lexicographically by normalized coordinates.
class ProjectiveSpace {
 public:
  ProjectiveSpace(std::uint32_t p, std::size_t d,
                  const Caps& caps = default_caps());

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.order(); }
  std::size_t dimension() const { return d_; }
  std::size_t num_points() const { return points_.size(); }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const ProjectivePoint& point(Point i) const { return points_[i]; }

  // Index of the point spanned by a nonzero vector.
  Point index_of(const Vector& v) const;
  ProjectivePoint normalize(Vector v) const;

 private:
  std::uint64_t encode(const Vector& v) const;

  PrimeField field_;
  std::size_t d_;
  std::vector<ProjectivePoint> points_;
  std::unordered_map<std::uint64_t, Point> index_;
};

inline ProjectiveSpace projective_points(std::uint32_t p, std::size_t d) {
  return ProjectiveSpace(p, d);
}

// (p^(d+1) - 1) / (p - 1)
std::uint64_t projective_point_count(std::uint32_t p, std::size_t d);
// Gaussian binomial [n choose k]_p.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p);
// |PGL(d+1, p)| = prod_{i=0}^{d} (p^(d+1) - p^i) / (p - 1)
BigInt pgl_order(std::uint32_t p, std::size_t d);

// Rank of a set of vectors over the field.
std::size_t rank_of(const PrimeField& f, std::vector<Vector> rows);

// All points in the linear span of the representatives of `s`.
PointSet span_closure(const ProjectiveSpace& space, const PointSet& s);

// Permutation of the point list induced by v -> M v.
Permutation induced_permutation(const ProjectiveSpace& space, const Matrix& m);

// PGL(d+1, p) acting on the points of PG(d, p). Prefers a generating pair
// (a Singer cycle and a transvection); falls back to elementary
// transvections plus a diagonal matrix. The order is verified against
// pgl_order (InternalError on mismatch).
PermutationGroup pgl_generators(const ProjectiveSpace& space);
PermutationGroup pgl_generators(std::uint32_t p, std::size_t d);

// All projective subspaces as point sets, including the empty set and the
// whole space, ordered by containment.
SetLattice subspace_lattice(const ProjectiveSpace& space,
                            const Caps& caps = default_caps());
SetLattice subspace_lattice(std::uint32_t p, std::size_t d,
                            const Caps& caps = default_caps());

struct OracleIsoReport {
  bool isomorphic = false;
  std::size_t fixset_count = 0;
  std::size_t subspace_count = 0;
  // First point-set present in one family but not the other.
  std::optional<PointSet> mismatch;
};

// Compares the fixset lattice of the PGL action with the subspace lattice
// through the identity on point sets.
OracleIsoReport oracle_iso_report(std::uint32_t p, std::size_t d,
                                  const Caps& caps = default_caps());
inline bool oracle_iso_check(std::uint32_t p, std::size_t d) {
  return oracle_iso_report(p, d).isomorphic;
}

}  // namespace fixlat

#endif  // FIXLAT_GEOMETRY_HPP_
