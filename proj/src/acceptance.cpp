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

#include "fixlat/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "fixlat/closure.hpp"
#include "fixlat/fol.hpp"
#include "fixlat/geometry.hpp"
#include "fixlat/lattice.hpp"
#include "fixlat/oracle/brute_force.hpp"
#include "fixlat/perm_group.hpp"
#include "fixlat/steiner.hpp"

namespace fixlat {
namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures.size() < kMaxListed) failures.push_back(what);
    else ++suppressed;
  }
  std::vector<std::string> finish() {
    if (suppressed > 0)
      failures.push_back("... and " + std::to_string(suppressed) + " more");
    return std::move(failures);
  }
  static constexpr std::size_t kMaxListed = 12;
  std::size_t suppressed = 0;
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
  std::vector<std::string> failures;
  std::string detail;
};

std::string str(const PointSet& s) { return s.to_string(); }

std::string orbits_str(const std::vector<std::vector<Point>>& orbs) {
  std::string out;
  for (const auto& o : orbs) out += PointSet(o.empty() ? 1 : o.back() + 1,
                                             std::span<const Point>(o))
                                        .to_string();
  return out;
}

SteinerSystem reference_fano(const AcceptanceOptions& opt) {
  SteinerSystem s{2, 7, oracle::fano_lines()};
  if (opt.inject_fault == "fano-block") {
    // Move one point of the first line onto a point off it.
    auto& b = s.blocks.front();
    for (Point x = 0; x < 7; ++x)
      if (std::find(b.begin(), b.end(), x) == b.end()) {
        b.back() = x;
        break;
      }
  }
  s.normalize();
  return s;
}

std::vector<PointSet> brute_fixsets(const PermutationGroup& g,
                                    const Caps& caps) {
  const auto elements =
      oracle::enumerate_elements(g.degree(), g.generators(), caps.exhaustive_order);
  std::vector<PointSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.degree()); ++m)
    out.push_back(
        oracle::brute_closure(elements, PointSet::from_mask(g.degree(), m)));
  return out;
}

void fano_lattice(const AcceptanceOptions& opt, Checker& c) {
  const auto g = pgl_generators(2, 2);
  const auto lat = enumerate_fixset_lattice(g, opt.caps);
  c.expect(lat.size() == 16,
           "fixset lattice has " + std::to_string(lat.size()) + " elements");
  c.expect(lat.size_profile() ==
               std::vector<std::size_t>{1, 7, 0, 7, 0, 0, 0, 1},
           "fixset sizes are not 1 empty, 7 points, 7 lines, top");
  c.expect(lat == SetLattice(7, brute_fixsets(g, opt.caps)),
           "differs from brute-force closure of all 128 subsets");
  for (const auto& line : oracle::fano_lines())
    c.expect(lat.contains(PointSet(7, std::span<const Point>(line))),
             "missing line " + str(PointSet(7, std::span<const Point>(line))));
  c.expect(oracle_iso_check(2, 2), "oracle_iso_check(2,2) is false");
  c.note(std::to_string(lat.size()) + " fixsets");
}

void meet_join(const AcceptanceOptions& opt, Checker& c) {
  const auto g = pgl_generators(2, 2);
  const auto fix = enumerate_fixset_lattice(g, opt.caps);
  const auto sub = subspace_lattice(2, 2, opt.caps);
  const auto order = sub.to_finite_lattice();
  const auto id = g.fingerprint();
  std::size_t pairs = 0, triples = 0;
  auto sub_index = [&](const PointSet& s) { return *sub.index_of(s); };
  for (std::size_t i = 0; i < fix.size(); ++i) {
    const FixSet a{fix[i], id};
    if (!sub.contains(fix[i])) {
      c.expect(false, "fixset " + str(fix[i]) + " is not a subspace");
      continue;
    }
    const Element ia = sub_index(fix[i]);
    for (std::size_t j = 0; j < fix.size(); ++j) {
      const FixSet b{fix[j], id};
      const Element ib = sub_index(fix[j]);
      const auto m = fix_meet(g, a, b).points;
      const auto jn = fix_join(g, a, b).points;
      c.expect(m == (fix[i] & fix[j]), "meet is not intersection");
      c.expect(m == sub[order.meet(ia, ib)],
               "meet " + str(fix[i]) + " " + str(fix[j]));
      c.expect(jn == sub[order.join(ia, ib)],
               "join " + str(fix[i]) + " " + str(fix[j]));
      ++pairs;
      for (std::size_t k = 0; k < fix.size(); ++k) {
        const Element ik = sub_index(fix[k]);
        const auto m3 = fix[i] & fix[j] & fix[k];
        const auto j3 = fixset_closure(g, fix[i] | fix[j] | fix[k]).points;
        c.expect(is_fixset(g, m3), "triple intersection not closed");
        c.expect(m3 == sub[order.meet(order.meet(ia, ib), ik)],
                 "triple meet " + str(m3));
        c.expect(j3 == sub[order.join(order.join(ia, ib), ik)],
                 "triple join " + str(j3));
        ++triples;
      }
    }
  }
  c.note(std::to_string(pairs) + " pairs, " + std::to_string(triples) +
         " triples");
}

void galois(const AcceptanceOptions& opt, Checker& c) {
  const std::vector<std::pair<std::string, PermutationGroup>> groups{
      {"Sym(4)", symmetric_group(4)},
      {"PGL(3,2)", pgl_generators(2, 2)},
      {"PGL(2,5)", pgl_generators(5, 1)}};
  for (const auto& [name, g] : groups) {
    const auto lat = enumerate_fixset_lattice(g, opt.caps);
    const auto rep = galois_report(g, lat);
    c.expect(rep.pass, name + ": " + rep.failure);
    // Brute-force side: stabilizers as explicit element sets.
    const auto elements = oracle::enumerate_elements(
        g.degree(), g.generators(), opt.caps.exhaustive_order);
    std::vector<std::vector<Permutation>> stabs;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      auto s = oracle::stabilizer_elements(elements, lat[i]);
      std::sort(s.begin(), s.end());
      c.expect(g.pointwise_stabilizer(lat[i]).order() == s.size(),
               name + ": stabilizer order of " + str(lat[i]));
      stabs.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        const bool sub = lat[i].is_subset_of(lat[j]);
        const bool rev = std::includes(stabs[i].begin(), stabs[i].end(),
                                       stabs[j].begin(), stabs[j].end());
        c.expect(sub == rev, name + ": order not reversed at " + str(lat[i]) +
                                 ", " + str(lat[j]));
        if (i != j)
          c.expect(stabs[i] != stabs[j], name + ": two fixsets share a stabilizer");
      }
    c.note(name + " " + std::to_string(lat.size()) + " fixsets");
  }
}

void condition_s(const AcceptanceOptions& opt, Checker& c) {
  const auto chain = condition_S(chain_lattice(3), opt.caps);
  c.expect(!chain.holds, "3-chain: condition (S) holds");
  c.expect(chain.witness.has_value(), "3-chain: no witness reported");
  if (chain.witness)
    c.note("3-chain witness (" + std::to_string(chain.witness->first) + "," +
           std::to_string(chain.witness->second) + ")");
  const std::vector<std::pair<std::string, FiniteLattice>> holds{
      {"M_4", m_lattice(4)},
      {"Boolean 2^3", boolean_lattice(3)},
      {"Fano subspaces", subspace_lattice(2, 2, opt.caps).to_finite_lattice()}};
  for (const auto& [name, l] : holds) {
    const auto r = condition_S(l, opt.caps);
    std::string why = name + ": condition (S) fails";
    if (r.witness)
      why += " at (" + l.label(r.witness->first) + ", " +
             l.label(r.witness->second) + ")";
    c.expect(r.holds, why);
  }
}

void qubit(const AcceptanceOptions& opt, Checker& c) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto r = reconstruct(m_lattice(n), opt.caps);
    const std::string name = "M_" + std::to_string(n);
    c.expect(!r.cl_trivial, name + ": cl is trivial");
    c.expect(r.rho_image.size() == n + 2,
             name + ": |rho_image| = " + std::to_string(r.rho_image.size()));
    c.expect(r.fixset_lattice.size() == (std::size_t{1} << n),
             name + ": fixset lattice has " +
                 std::to_string(r.fixset_lattice.size()) + " elements, not " +
                 std::to_string(std::size_t{1} << n));
    c.note(name + " rho " + std::to_string(r.rho_image.size()) + "/" +
           std::to_string(r.fixset_lattice.size()));
  }
  const auto fano =
      reconstruct(subspace_lattice(2, 2, opt.caps).to_finite_lattice(), opt.caps);
  c.expect(fano.cl_trivial, "Fano: cl is not trivial");
  c.expect(fano.iso.has_value(), "Fano: no isomorphism emitted");
  if (fano.iso) {
    const auto l = subspace_lattice(2, 2, opt.caps).to_finite_lattice();
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = 0; b < l.size(); ++b)
        c.expect(l.leq(a, b) == fano.fixset_lattice[(*fano.iso)[a]].is_subset_of(
                                    fano.fixset_lattice[(*fano.iso)[b]]),
                 "Fano: iso does not preserve order");
  }
}

std::vector<std::vector<bool>> leq_of(const FiniteLattice& l) {
  std::vector<std::vector<bool>> m(l.size(), std::vector<bool>(l.size()));
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b) m[a][b] = l.leq(a, b);
  return m;
}

void automorphisms(const AcceptanceOptions& opt, Checker& c) {
  const std::vector<std::tuple<std::string, FiniteLattice, std::size_t>> cases{
      {"Fano subspaces", subspace_lattice(2, 2, opt.caps).to_finite_lattice(), 168},
      {"M_4", m_lattice(4), 24},
      {"3-chain", chain_lattice(3), 1}};
  for (const auto& [name, l, want] : cases) {
    const auto aut = lattice_automorphisms(l, opt.caps);
    c.expect(aut.order() == want, name + ": |Aut| = " + aut.order().str());
    for (const auto& g : aut.generators())
      for (Element a = 0; a < l.size(); ++a)
        for (Element b = 0; b < l.size(); ++b)
          c.expect(l.leq(a, b) == l.leq(g(a), g(b)),
                   name + ": generator breaks the order");
    if (l.size() <= 10)
      c.expect(oracle::order_automorphism_count(leq_of(l)) == want,
               name + ": brute-force count differs");
  }
  c.expect(pgl_order(2, 2) == 168, "PGL(3,2) order formula");
}

void jordan(const AcceptanceOptions& opt, Checker& c) {
  const std::vector<std::tuple<std::string, PermutationGroup, std::size_t>> cases{
      {"Sym(6)", symmetric_group(6), 5},
      {"PGL(3,2)", pgl_generators(2, 2), 2},
      {"PGL(2,5)", pgl_generators(5, 1), 3},
      {"PGL(4,2)", pgl_generators(2, 3), 2}};
  for (const auto& [name, g, degree] : cases) {
    const auto rep = jordan_report(g, 5, opt.caps);
    c.expect(rep.condition_T, name + ": condition (T) false");
    c.expect(rep.transitivity_degree == degree,
             name + ": transitivity degree " +
                 std::to_string(rep.transitivity_degree));
    // tuple-orbit oracle: k-transitive but not (k+1)-transitive
    const auto& gens = g.generators();
    c.expect(oracle::tuple_orbit_count(g.degree(), gens, degree) == 1,
             name + ": not " + std::to_string(degree) + "-transitive by orbit count");
    if (degree < 5)
      c.expect(oracle::tuple_orbit_count(g.degree(), gens, degree + 1) > 1,
               name + ": unexpectedly " + std::to_string(degree + 1) +
                   "-transitive");
  }
  const auto d6 = jordan_report(dihedral_group(6), 5, opt.caps);
  c.expect(!d6.condition_T, "D_6: condition (T) holds");
  if (d6.first_failure) {
    const auto& e = d6.entries[*d6.first_failure];
    c.expect(e.fixset == PointSet(6, {0, 3}), "D_6: witness " + str(e.fixset));
    c.expect(e.complement_orbits ==
                 std::vector<std::vector<Point>>{{1, 5}, {2, 4}},
             "D_6: complement orbits " + orbits_str(e.complement_orbits));
    c.note("D_6 witness " + str(e.fixset));
  } else {
    c.expect(false, "D_6: no witness");
  }
}

void dcl_span(const AcceptanceOptions& opt, Checker& c) {
  const auto space = ProjectiveSpace(2, 2, opt.caps);
  const auto g = pgl_generators(space);
  const auto s = canonical_structure(g, 3, opt.caps);
  ClosureOperator close(g);
  std::size_t agree = 0;
  for (std::uint64_t m = 0; m < 128; ++m) {
    const auto x = PointSet::from_mask(7, m);
    const auto d = relational_dcl(s, x);
    const bool ok = d == close(x) && d == span_closure(space, x);
    c.expect(ok, "disagreement at " + str(x));
    agree += ok;
  }
  c.note(std::to_string(agree) + "/128 subsets agree");
}

void steiner(const AcceptanceOptions& opt, Checker& c) {
  const auto fano = reference_fano(opt);
  c.expect(verify_steiner(fano, opt.caps).valid, "reference Fano system invalid");
  const auto s348 = steiner_from_affine_planes(3);
  const auto v = verify_steiner(s348, opt.caps);
  c.expect(v.valid && s348.k == 3 && s348.num_points == 8 &&
               s348.blocks.size() == 14,
           "S(3,4,8) from AG(3,2) planes invalid");
  std::vector<SteinerSystem> two_systems{
      fano,
      steiner_from_projective(2, 3),
      steiner_from_projective(3, 2),
      steiner_from_projective(5, 2),
      steiner_from_affine(3, 2),
      steiner_from_affine(3, 3),
      steiner_from_affine(5, 2)};
  for (Point p = 0; p < 8; ++p) {
    SteinerSystem d;
    try {
      d = derivation(s348, p);
    } catch (const std::exception& e) {
      c.expect(false, "derivation at " + std::to_string(p) + ": " + e.what());
      continue;
    }
    c.expect(d.k == 2 && d.num_points == 7 && verify_steiner(d, opt.caps).valid,
             "derivation at " + std::to_string(p) + " is not an S(2,3,7)");
    c.expect(steiner_isomorphism(d, fano, opt.caps).has_value(),
             "derivation at " + std::to_string(p) + " not isomorphic to Fano");
    two_systems.push_back(d);
  }
  for (const auto& s : two_systems)
    c.expect(satisfies_counting_identity(s),
             "counting identity fails on " + std::to_string(s.num_points) +
                 "-point system");
  c.note(std::to_string(two_systems.size()) + " 2-systems counted");
}

void scale(const AcceptanceOptions& opt, Checker& c) {
  const auto g = pgl_generators(2, 3);
  c.expect(g.order() == 20160, "PGL(4,2) order " + g.order().str());
  const auto lat = enumerate_fixset_lattice(g, opt.caps);
  c.expect(lat.size() == 67, "fixset lattice has " + std::to_string(lat.size()));
  c.expect(lat == subspace_lattice(2, 3, opt.caps), "differs from subspace lattice");
  c.expect(jordan_report(g, 5, opt.caps).condition_T, "condition (T) false");
}

void stone(const AcceptanceOptions& opt, Checker& c) {
  const auto b3 = boolean_lattice(3);
  const auto s = stone_ultrafilters(b3);
  c.expect(s.ultrafilters.size() == 3,
           std::to_string(s.ultrafilters.size()) + " ultrafilters");
  c.expect(s.injective, "u is not injective");
  for (Element a : atoms(b3))
    c.expect(s.u_map[a].size() == 1, "atom in more than one ultrafilter");
  const auto fano = subspace_lattice(2, 2, opt.caps).to_finite_lattice();
  c.expect(!is_distributive(fano), "Fano subspace lattice reported distributive");
  bool refused = false;
  try {
    stone_ultrafilters(fano);
  } catch (const PreconditionError&) {
    refused = true;
  }
  c.expect(refused, "stone_ultrafilters accepted the Fano lattice");
}

using CheckFn = void (*)(const AcceptanceOptions&, Checker&);

const std::vector<CheckFn>& check_functions() {
  static const std::vector<CheckFn> fns{fano_lattice, meet_join, galois,
                                        condition_s,  qubit,     automorphisms,
                                        jordan,       dcl_span,  steiner,
                                        scale,        stone};
  return fns;
}

bool selected(const Criterion& c, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only)
    if (o == c.name || o == std::to_string(c.id)) return true;
  return false;
}

CriterionResult run_one(const Criterion& crit, CheckFn fn,
                        const AcceptanceOptions& opt) {
  CriterionResult r;
  r.criterion = crit;
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(opt, c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  r.checks_pass = c.failures.empty() && c.suppressed == 0;
  r.pass = r.checks_pass && (!crit.time_limit || r.seconds < *crit.time_limit);
  if (r.checks_pass && !r.pass)
    c.failures.push_back("time limit exceeded");
  r.failures = c.finish();
  r.detail = std::move(c.detail);
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list{
      {1, "fano", "Fano fixset lattice and oracle isomorphism", 5.0},
      {2, "meet-join", "fixset meet/join agree with subspace lattice on pairs and triples", 5.0},
      {3, "galois", "order-reversing stabilizer/fixset bijection", std::nullopt},
      {4, "condition-s", "condition (S) on chain, M_4, Boolean 2^3, Fano", 5.0},
      {5, "qubit", "residual closure on M_3..M_5 and Fano", std::nullopt},
      {6, "automorphisms", "lattice automorphism group orders", 30.0},
      {7, "jordan", "condition (T) and transitivity degrees", 60.0},
      {8, "dcl-span", "relational dcl = fixset closure = span on Fano", 10.0},
      {9, "steiner", "S(3,4,8) derivations and counting identities", 10.0},
      {10, "scale", "PGL(4,2) fixset lattice and condition (T)", 120.0},
      {11, "stone", "finite Stone representation", std::nullopt},
  };
  return list;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const auto& all = acceptance_criteria();
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (selected(all[i], options.only)) todo.push_back(i);

  std::vector<std::optional<CriterionResult>> slots(todo.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      if (options.fail_fast && stop.load()) return;
      const std::size_t k = next.fetch_add(1);
      if (k >= todo.size()) return;
      const std::size_t i = todo[k];
      slots[k] = run_one(all[i], check_functions()[i], options);
      if (!slots[k]->pass) stop.store(true);
    }
  };
  const std::size_t n = std::max<std::size_t>(
      1, std::min(options.workers, todo.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<CriterionResult> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream out;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  out << (r.pass ? "PASS" : "FAIL") << "  " << r.criterion.id << " "
      << r.criterion.name << "  (" << secs << " s";
  if (r.criterion.time_limit) out << ", limit " << *r.criterion.time_limit << " s";
  else out << ", exact";
  out << ")";
  if (!r.detail.empty()) out << "  " << r.detail;
  for (const auto& f : r.failures) out << "\n      " << f;
  return out.str();
}

}  // namespace fixlat
