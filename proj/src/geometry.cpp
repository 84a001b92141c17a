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

#include "fixlat/geometry.hpp"

#include <algorithm>

#include "fixlat/closure.hpp"
#include "fixlat/error.hpp"

namespace fixlat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw ValidationError("field order " + std::to_string(p) +
                          " is not prime (extension fields unsupported)");
  if (p >= (1u << 16))
    throw ValidationError("field order " + std::to_string(p) + " too large");
  inverse_.assign(p, 0);
  for (Scalar a = 1; a < p; ++a)
    for (Scalar b = 1; b < p; ++b)
      if ((a * b) % p == 1) {
        inverse_[a] = b;
        break;
      }
  for (Scalar g = 1; g < p; ++g) {
    Scalar x = 1;
    std::uint32_t ord = 0;
    do {
      x = (x * g) % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) {
      primitive_root_ = g;
      break;
    }
  }
}

std::uint64_t projective_point_count(std::uint32_t p, std::size_t d) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i <= d; ++i) {
    total += power;
    power *= p;
  }
  return total;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p) {
  if (k > n) return 0;
  // prod_{i<k} (p^(n-i) - 1) / (p^(i+1) - 1), exact at every step.
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(i + 1)) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

BigInt pgl_order(std::uint32_t p, std::size_t d) {
  const auto n = static_cast<unsigned>(d + 1);
  const BigInt q = p;
  BigInt order = 1;
  for (unsigned i = 0; i < n; ++i)
    order *= boost::multiprecision::pow(q, n) - boost::multiprecision::pow(q, i);
  return order / (q - 1);
}

ProjectiveSpace::ProjectiveSpace(std::uint32_t p, std::size_t d,
                                 const Caps& caps)
    : field_(p), d_(d) {
  if (d < 1) throw ValidationError("projective dimension must be >= 1");
  const std::uint64_t count = projective_point_count(p, d);
  if (count > caps.projective_points)
    throw CapacityError("points", caps.projective_points, count,
                        "PG(" + std::to_string(d) + "," + std::to_string(p) +
                            ") has " + std::to_string(count) +
                            " points, cap is " +
                            std::to_string(caps.projective_points));
  const std::size_t n = d + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  // Lexicographic order: coordinate 0 is the most significant digit.
  for (std::uint64_t code = 1; code < total; ++code) {
    Vector v(n);
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<PrimeField::Scalar>(c % p);
      c /= p;
    }
    auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (*lead != 1) continue;
    index_.emplace(code, static_cast<Point>(points_.size()));
    points_.push_back({std::move(v)});
  }
}

std::uint64_t ProjectiveSpace::encode(const Vector& v) const {
  std::uint64_t code = 0;
  for (auto x : v) code = code * field_.order() + x;
  return code;
}

ProjectivePoint ProjectiveSpace::normalize(Vector v) const {
  if (v.size() != d_ + 1) throw ValidationError("vector has wrong length");
  auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (lead == v.end()) throw ValidationError("zero vector has no point");
  const auto s = field_.inv(*lead);
  for (auto& x : v) x = field_.mul(x, s);
  return {std::move(v)};
}

Point ProjectiveSpace::index_of(const Vector& v) const {
  return index_.at(encode(normalize(v).coords));
}

namespace {

// Row-reduces in place; returns the pivot column of each kept row.
std::vector<std::size_t> echelonize(const PrimeField& f,
                                    std::vector<Vector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      const auto factor = rows[k][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[k][j] = f.sub(rows[k][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

bool in_row_space(const PrimeField& f, const std::vector<Vector>& basis,
                  const std::vector<std::size_t>& pivots, Vector v) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto factor = v[pivots[k]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = f.sub(v[j], f.mul(factor, basis[k][j]));
  }
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

std::size_t rank_of(const PrimeField& f, std::vector<Vector> rows) {
  return echelonize(f, rows).size();
}

PointSet span_closure(const ProjectiveSpace& space, const PointSet& s) {
  if (s.universe() != space.num_points())
    throw ValidationError("point set universe does not match the space");
  PointSet out(space.num_points());
  if (s.empty()) return out;
  std::vector<Vector> basis;
  s.for_each([&](Point p) { basis.push_back(space.point(p).coords); });
  const auto pivots = echelonize(space.field(), basis);
  for (Point i = 0; i < space.num_points(); ++i)
    if (in_row_space(space.field(), basis, pivots, space.point(i).coords))
      out.insert(i);
  return out;
}

Permutation induced_permutation(const ProjectiveSpace& space,
                                const Matrix& m) {
  const auto& f = space.field();
  const std::size_t n = space.dimension() + 1;
  if (m.size() != n) throw ValidationError("matrix has wrong size");
  std::vector<Point> img(space.num_points());
  for (Point i = 0; i < space.num_points(); ++i) {
    const auto& v = space.point(i).coords;
    Vector w(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        w[r] = f.add(w[r], f.mul(m[r][c], v[c]));
    img[i] = space.index_of(w);
  }
  return Permutation(std::move(img));
}

namespace {

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_single_cycle(const Permutation& g) {
  Point x = 0;
  std::size_t len = 0;
  do {
    x = g(x);
    ++len;
  } while (x != 0);
  return len == g.degree();
}

}  // namespace

PermutationGroup pgl_generators(const ProjectiveSpace& space) {
  const auto& f = space.field();
  const std::uint32_t p = f.order();
  const std::size_t n = space.dimension() + 1;
  const std::size_t degree = space.num_points();
  const BigInt target = pgl_order(p, space.dimension());

  // Companion matrices of x^n + c_{n-1} x^{n-1} + ... + c_0, c_0 != 0, in
  // lexicographic order of (c_0, ..., c_{n-1}); the first whose action is a
  // single cycle on all points is a Singer cycle.
  std::optional<Permutation> singer;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 0; code < total && !singer; ++code) {
    Vector c(n);
    std::uint64_t x = code;
    for (std::size_t i = n; i-- > 0;) {
      c[i] = static_cast<PrimeField::Scalar>(x % p);
      x /= p;
    }
    if (c[0] == 0) continue;
    Matrix comp(n, Vector(n, 0));
    for (std::size_t i = 1; i < n; ++i) comp[i][i - 1] = 1;
    for (std::size_t i = 0; i < n; ++i) comp[i][n - 1] = f.neg(c[i]);
    auto g = induced_permutation(space, comp);
    if (is_single_cycle(g)) singer = std::move(g);
  }
  if (singer) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Matrix t = identity_matrix(n);
        t[i][j] = 1;
        PermutationGroup g(degree, {*singer, induced_permutation(space, t)});
        if (g.order() == target) return g;
      }
  }

  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix up = identity_matrix(n), down = identity_matrix(n);
    up[i][i + 1] = 1;
    down[i + 1][i] = 1;
    gens.push_back(induced_permutation(space, up));
    gens.push_back(induced_permutation(space, down));
  }
  Matrix diag = identity_matrix(n);
  diag[0][0] = f.primitive_root();
  if (diag[0][0] != 1) gens.push_back(induced_permutation(space, diag));
  PermutationGroup g(degree, std::move(gens));
  if (g.order() != target)
    throw InternalError("PGL generators produce order " + g.order().str() +
                        ", expected " + target.str());
  return g;
}

PermutationGroup pgl_generators(std::uint32_t p, std::size_t d) {
  return pgl_generators(ProjectiveSpace(p, d));
}

SetLattice subspace_lattice(const ProjectiveSpace& space, const Caps& caps) {
  const std::size_t n = space.num_points();
  std::vector<PointSet> seeds;
  seeds.emplace_back(n);
  for (Point a = 0; a < n; ++a) seeds.push_back(PointSet(n, {a}));
  auto elements = saturate_under_join(
      std::move(seeds),
      [&](const PointSet& u) { return span_closure(space, u); },
      caps.lattice_size);
  elements.push_back(PointSet::full(n));
  return SetLattice(n, std::move(elements));
}

SetLattice subspace_lattice(std::uint32_t p, std::size_t d, const Caps& caps) {
  return subspace_lattice(ProjectiveSpace(p, d, caps), caps);
}

OracleIsoReport oracle_iso_report(std::uint32_t p, std::size_t d,
                                  const Caps& caps) {
  const ProjectiveSpace space(p, d, caps);
  const auto fix = enumerate_fixset_lattice(pgl_generators(space), caps);
  const auto sub = subspace_lattice(space, caps);
  OracleIsoReport r;
  r.fixset_count = fix.size();
  r.subspace_count = sub.size();
  for (const auto& e : fix.elements())
    if (!sub.contains(e) && !r.mismatch) r.mismatch = e;
  for (const auto& e : sub.elements())
    if (!fix.contains(e) && !r.mismatch) r.mismatch = e;
  r.isomorphic = !r.mismatch && fix.size() == sub.size();
  return r;
}

}  // namespace fixlat
