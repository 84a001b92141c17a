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

#include "fixlat/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fixlat/acceptance.hpp"
#include "fixlat/closure.hpp"
#include "fixlat/fol.hpp"
#include "fixlat/geometry.hpp"
#include "fixlat/json_io.hpp"
#include "fixlat/lattice.hpp"
#include "fixlat/steiner.hpp"

namespace fixlat {
namespace {

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  std::size_t workers = 1;
  std::optional<std::size_t> cap_lattice;
  std::optional<std::size_t> cap_order;
  std::size_t arity = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 256;
  std::size_t k_max = 5;
  bool no_timing = false;
  // command arguments
  std::string points;
  std::string group_file;
  std::uint32_t p = 2;
  std::size_t d = 2;
  std::optional<std::size_t> point;
  bool planes = false;
  bool dump_structure = false;
  std::vector<std::string> only;
  bool fail_fast = false;
  std::string inject_fault;

  Caps caps() const {
    Caps c;
    if (cap_lattice) c.lattice_size = *cap_lattice;
    if (cap_order) c.exhaustive_order = *cap_order;
    return c;
  }
};

struct Output {
  Output() = default;
  Output(Json r, std::optional<std::string> d = std::nullopt,
         std::string t = {}, bool failed = false)
      : result(std::move(r)), dot(std::move(d)), text(std::move(t)),
        check_failed(failed) {}

  Json result;
  std::optional<std::string> dot;  // Hasse diagram, for lattice results
  std::string text;                // replaces the generic text rendering
  bool check_failed = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::string& require_in(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  return o.in;
}

GroupAction load_group(const std::string& path, const Caps& caps) {
  return group_from_json(read_json_file(path), caps);
}

Json orbits_json(const std::vector<std::vector<Point>>& orbs) {
  return Json(orbs);
}

// --- group -----------------------------------------------------------------

Output group_orbits(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  return Output({{"orbits", orbits_json(g.orbits())},
                 {"transitive", g.is_transitive()}});
}

Output group_stab(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  const auto delta = parse_point_list(o.points, g.degree());
  const auto h = g.pointwise_stabilizer(delta);
  return Output({{"points", to_json(delta)},
           {"order", order_to_json(h.order())},
           {"generators", to_json(h)["generators"]},
           {"orbits", orbits_json(h.orbits())},
           {"fixset", to_json(fixed_points(h))}});
}

Output group_order_cmd(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  return Output({{"degree", g.degree()}, {"order", order_to_json(g.order())}});
}

Output group_transitivity(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  return Output({{"k_max", o.k_max},
           {"transitivity_degree", g.transitivity_degree(o.k_max)}});
}

Output group_primitivity(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  const auto pr = g.primitivity();
  Json j{{"primitive", pr.primitive}};
  j["block_system"] = pr.block_system ? Json(*pr.block_system) : Json(nullptr);
  return {j};
}

Output group_fixlattice(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  const auto lat = enumerate_fixset_lattice(g, o.caps());
  const auto rep = galois_report(g, lat);
  Json j = to_json(lat);
  j["galois_pass"] = rep.pass;
  j["size_profile"] = lat.size_profile();
  return {j, hasse_dot(lat.to_finite_lattice(), "fixsets")};
}

Output group_jordan(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  const auto rep = jordan_report(g, o.k_max, o.caps());
  Json entries = Json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"fixset", to_json(e.fixset)},
                       {"complement_orbits", orbits_json(e.complement_orbits)},
                       {"jordan", e.jordan}});
  Json j{{"condition_T", rep.condition_T},
         {"transitivity_degree", rep.transitivity_degree},
         {"entries", entries}};
  if (rep.first_failure) {
    const auto& e = rep.entries[*rep.first_failure];
    j["witness"] = {{"fixset", to_json(e.fixset)},
                    {"complement_orbits", orbits_json(e.complement_orbits)}};
  } else {
    j["witness"] = nullptr;
  }
  return {j};
}

Output group_dclcheck(const Options& o) {
  const auto g = load_group(require_in(o), o.caps()).group;
  const auto rep = dcl_vs_fixset_report(g, o.arity, o.seed, o.samples, o.caps());
  Json dis = Json::array();
  for (const auto& d : rep.disagreements)
    dis.push_back({{"subset", to_json(d.subset)},
                   {"dcl", to_json(d.dcl)},
                   {"fixset", to_json(d.fixset)}});
  Json j{{"max_arity", rep.max_arity},
         {"exhaustive", rep.exhaustive},
         {"tested", rep.tested},
         {"agreements", rep.agreements},
         {"agreement_rate", rep.agreement_rate()},
         {"sound", rep.sound},
         {"disagreements", dis}};
  j["minimal_sufficient_arity"] = rep.minimal_sufficient_arity
                                      ? Json(*rep.minimal_sufficient_arity)
                                      : Json(nullptr);
  if (o.dump_structure)
    j["structure"] = structure_to_json(canonical_structure(g, o.arity, o.caps()),
                                       100'000);
  return {j};
}

// --- lattice ---------------------------------------------------------------

const char* kind_name(LatticeViolation::Kind k) {
  using K = LatticeViolation::Kind;
  switch (k) {
    case K::kEmpty: return "empty";
    case K::kNotReflexive: return "not_reflexive";
    case K::kNotAntisymmetric: return "not_antisymmetric";
    case K::kNotTransitive: return "not_transitive";
    case K::kNoMeet: return "no_meet";
    case K::kNoJoin: return "no_join";
  }
  return "unknown";
}

std::string violation_label(const LatticeViolation& v,
                            const std::vector<std::string>& labels) {
  if (labels.empty()) return v.describe();
  return v.describe() + " [" + labels[v.a] + ", " + labels[v.b] + "]";
}

Output lattice_validate_cmd(const Options& o) {
  const Json doc = read_json_file(require_in(o));
  const auto leq = leq_from_json(doc);
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
  const auto v = lattice_validate(leq.size(), leq, labels);
  Json vs = Json::array();
  for (const auto& x : v.violations)
    vs.push_back({{"kind", kind_name(x.kind)}, {"a", x.a}, {"b", x.b},
                  {"message", violation_label(x, labels)}});
  Output out{{{"valid", v.valid()}, {"size", leq.size()}, {"violations", vs}}};
  if (v.valid()) {
    out.result["atoms"] = atoms(*v.lattice);
    out.result["atomistic"] = is_atomistic(*v.lattice);
    out.result["distributive"] = is_distributive(*v.lattice);
    out.dot = hasse_dot(*v.lattice);
  }
  out.check_failed = !v.valid();
  return out;
}

Output lattice_automorphisms_cmd(const Options& o) {
  const auto l = lattice_from_json(read_json_file(require_in(o)));
  const auto aut = lattice_automorphisms(l, o.caps());
  return Output({{"order", order_to_json(aut.order())},
           {"generators", to_json(aut)["generators"]}});
}

Output lattice_check_s(const Options& o) {
  const auto l = lattice_from_json(read_json_file(require_in(o)));
  const auto r = condition_S(l, o.caps());
  Json j{{"holds", r.holds}};
  if (r.witness)
    j["witness"] = {{"elements", {r.witness->first, r.witness->second}},
                    {"labels", {l.label(r.witness->first), l.label(r.witness->second)}}};
  else
    j["witness"] = nullptr;
  return {j, std::nullopt, "", !r.holds};
}

Output lattice_reconstruct(const Options& o) {
  const auto l = lattice_from_json(read_json_file(require_in(o)));
  const auto r = reconstruct(l, o.caps());
  Json atom_labels = Json::array();
  for (Element e : r.atom_elements) atom_labels.push_back(l.label(e));
  Json j{{"cl_trivial", r.cl_trivial},
         {"rho_injective", r.rho_injective},
         {"rho_order_embedding", r.rho_order_embedding},
         {"atoms", r.atom_elements},
         {"atom_labels", atom_labels},
         {"atom_action", to_json(r.atom_action.group)},
         {"atom_action_order", order_to_json(r.atom_action.group.order())},
         {"rho", r.rho},
         {"rho_image", r.rho_image},
         {"rho_image_size", r.rho_image.size()},
         {"cl", r.cl},
         {"lattice", to_json(l)},
         {"fixset_lattice", to_json(r.fixset_lattice)}};
  j["iso"] = r.iso ? Json(*r.iso) : Json(nullptr);
  return {j, hasse_dot(r.fixset_lattice.to_finite_lattice(), "fixsets")};
}

Output lattice_stone(const Options& o) {
  const auto l = lattice_from_json(read_json_file(require_in(o)));
  Json j{{"distributive", is_distributive(l)}, {"complemented", is_complemented(l)}};
  const auto s = stone_ultrafilters(l);
  Json uf = Json::array();
  for (const auto& u : s.ultrafilters) uf.push_back(to_json(u));
  Json um = Json::array();
  for (const auto& u : s.u_map) um.push_back(to_json(u));
  j["ultrafilters"] = uf;
  j["u_map"] = um;
  j["injective"] = s.injective;
  return {j};
}

// --- steiner ---------------------------------------------------------------

Json verification_json(const SteinerVerification& v) {
  Json vs = Json::array();
  for (const auto& x : v.violations) vs.push_back(x.describe());
  return {{"valid", v.valid}, {"violations", vs}};
}

Output steiner_build_pg(const Options& o) {
  const auto s = steiner_from_projective(o.p, o.d);
  return {to_json(s)};
}

Output steiner_build_ag(const Options& o) {
  const auto s = o.planes ? steiner_from_affine_planes(o.d)
                          : steiner_from_affine(o.p, o.d);
  return {to_json(s)};
}

Output steiner_verify(const Options& o) {
  const auto s = steiner_from_json(read_json_file(require_in(o)));
  const auto v = verify_steiner(s, o.caps());
  Json j = verification_json(v);
  j["counting_identity"] = s.k == 2 ? Json(satisfies_counting_identity(s))
                                    : Json(nullptr);
  return {j, std::nullopt, "", !v.valid};
}

Output steiner_derive(const Options& o) {
  const auto s = steiner_from_json(read_json_file(require_in(o)));
  if (!o.point) throw UsageError("--point is required");
  const auto d = derivation(s, static_cast<Point>(*o.point));
  return Output({{"system", to_json(d)},
           {"verification", verification_json(verify_steiner(d, o.caps()))}});
}

Output steiner_autcheck(const Options& o) {
  const auto s = steiner_from_json(read_json_file(require_in(o)));
  if (o.group_file.empty()) throw UsageError("--group is required");
  const auto g = load_group(o.group_file, o.caps()).group;
  const auto r = steiner_automorphism_check(s, g);
  Json j{{"preserves_blocks", r.preserves_blocks}};
  j["generator"] = r.generator ? Json(*r.generator) : Json(nullptr);
  j["block"] = r.block ? Json(*r.block) : Json(nullptr);
  if (r.preserves_blocks && s.k >= 2) {
    const auto b = block_pointwise_stabilization(s, g);
    j["blocks_stabilized_pointwise"] = b.pointwise;
  }
  return {j, std::nullopt, "", !r.preserves_blocks};
}

// --- geometry --------------------------------------------------------------

Output geometry_points(const Options& o) {
  const ProjectiveSpace space(o.p, o.d, o.caps());
  Json pts = Json::array();
  for (const auto& pt : space.points()) pts.push_back(pt.coords);
  return Output({{"p", o.p}, {"d", o.d}, {"count", space.num_points()}, {"points", pts}});
}

Output geometry_span(const Options& o) {
  const ProjectiveSpace space(o.p, o.d, o.caps());
  const auto s = parse_point_list(o.points, space.num_points());
  return Output({{"points", to_json(s)}, {"span", to_json(span_closure(space, s))}});
}

Output geometry_pgl(const Options& o) {
  const ProjectiveSpace space(o.p, o.d, o.caps());
  const auto g = pgl_generators(space);
  Json j = to_json(g);
  j["order"] = order_to_json(g.order());
  return {j};
}

Output geometry_subspaces(const Options& o) {
  const auto lat = subspace_lattice(ProjectiveSpace(o.p, o.d, o.caps()), o.caps());
  Json j = to_json(lat);
  j["size_profile"] = lat.size_profile();
  return {j, hasse_dot(lat.to_finite_lattice(), "subspaces")};
}

Output geometry_oracle_iso(const Options& o) {
  const auto r = oracle_iso_report(o.p, o.d, o.caps());
  Json j{{"isomorphic", r.isomorphic},
         {"fixset_count", r.fixset_count},
         {"subspace_count", r.subspace_count}};
  j["mismatch"] = r.mismatch ? to_json(*r.mismatch) : Json(nullptr);
  return {j, std::nullopt, "", !r.isomorphic};
}

// --- verify-all ------------------------------------------------------------

Output verify_all(const Options& o) {
  AcceptanceOptions a;
  a.caps = o.caps();
  a.only = o.only;
  a.fail_fast = o.fail_fast;
  a.workers = o.workers;
  if (!o.inject_fault.empty()) {
    if (o.inject_fault != "fano-block")
      throw UsageError("unknown fault \"" + o.inject_fault + "\"");
    a.inject_fault = o.inject_fault;
  }
  for (const auto& name : o.only) {
    bool known = false;
    for (const auto& c : acceptance_criteria())
      known |= name == c.name || name == std::to_string(c.id);
    if (!known) throw UsageError("unknown check \"" + name + "\"");
  }
  const auto results = run_acceptance(a);
  Json list = Json::array();
  std::size_t passed = 0;
  std::string text;
  for (const auto& r : results) {
    passed += r.pass;
    Json item{{"id", r.criterion.id},
              {"name", r.criterion.name},
              {"summary", r.criterion.summary},
              {"pass", r.pass},
              {"seconds", o.no_timing ? 0.0 : r.seconds},
              {"failures", r.failures},
              {"detail", r.detail}};
    item["time_limit_seconds"] =
        r.criterion.time_limit ? Json(*r.criterion.time_limit) : Json(nullptr);
    list.push_back(item);
    text += format_result_line(r) + "\n";
  }
  text += std::to_string(passed) + "/" + std::to_string(results.size()) +
          " checks passed\n";
  Json j{{"checks", list},
         {"passed", passed},
         {"failed", results.size() - passed},
         {"total", results.size()}};
  return {j, std::nullopt, text, passed != results.size()};
}

// --- rendering -------------------------------------------------------------

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    const bool flat_array =
        value.is_array() &&
        std::all_of(value.begin(), value.end(),
                    [](const Json& x) { return !x.is_object(); });
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 1);
    } else if (flat_array || !value.is_array()) {
      out << pad << key << ": " << value.dump() << "\n";
    } else {
      out << pad << key << ":\n";
      for (const auto& x : value) {
        out << pad << "  -\n";
        render_text(x, out, indent + 2);
      }
    }
  }
}

Json config_json(const Options& o) {
  return {{"caps", caps_to_json(o.caps())},
          {"workers", o.workers},
          {"format", o.format},
          {"arity", o.arity},
          {"samples", o.samples},
          {"k_max", o.k_max}};
}

using Handler = std::function<Output(const Options&)>;

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fixset lattices of permutation groups", "fixlat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--out", o.out, "Write the report to a file");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--workers", o.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-lattice", o.cap_lattice, "Lattice size cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-order", o.cap_order,
                 "Group order cap for exhaustive oracles")
      ->check(CLI::PositiveNumber);
  app.add_option("--arity", o.arity, "Relation arity for dcl checks")
      ->check(CLI::Range(2, 4));
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_flag("--no-timing", o.no_timing,
               "Report wall time as 0 for reproducible output");
  app.set_version_flag("--version", FIXLAT_VERSION_STRING);

  std::string command;
  Handler handler;
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& help, Handler h) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&, name, parent, h] {
      command = parent->get_name() + " " + name;
      handler = h;
    });
    return sub;
  };
  auto with_in = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input JSON file")->required();
    return sub;
  };
  auto with_pd = [&](CLI::App* sub, const char* field_flag) {
    sub->add_option(field_flag, o.p, "Prime field order")->default_val(2);
    sub->add_option("-d", o.d, "Dimension")->default_val(2);
    return sub;
  };

  auto* group = app.add_subcommand("group", "Permutation group queries");
  group->require_subcommand(1);
  group->fallthrough();
  with_in(leaf(group, "orbits", "Orbits of the action", group_orbits));
  auto* stab = with_in(leaf(group, "stab", "Pointwise stabilizer", group_stab));
  stab->add_option("points", o.points, "Points, e.g. 0,1")->required();
  with_in(leaf(group, "order", "Group order", group_order_cmd));
  with_in(leaf(group, "transitivity", "Transitivity degree", group_transitivity))
      ->add_option("--k-max", o.k_max, "Largest k tested")->default_val(5);
  with_in(leaf(group, "primitivity", "Primitivity and a block system",
               group_primitivity));
  with_in(leaf(group, "fixlattice", "Fixset lattice", group_fixlattice));
  with_in(leaf(group, "jordan", "Jordan fixsets and condition (T)", group_jordan))
      ->add_option("--k-max", o.k_max, "Largest k tested")->default_val(5);
  auto* dcl = with_in(leaf(group, "dclcheck",
                           "Relational dcl against fixset closure", group_dclcheck));
  dcl->add_option("--samples", o.samples, "Random subsets above 12 points");
  dcl->add_flag("--dump-structure", o.dump_structure,
                "Include the canonical structure");

  auto* lattice = app.add_subcommand("lattice", "Explicit lattice queries");
  lattice->require_subcommand(1);
  lattice->fallthrough();
  with_in(leaf(lattice, "validate", "Check the lattice axioms", lattice_validate_cmd));
  with_in(leaf(lattice, "automorphisms", "Automorphism group",
               lattice_automorphisms_cmd));
  with_in(leaf(lattice, "check-s", "Condition (S)", lattice_check_s));
  with_in(leaf(lattice, "reconstruct", "Fixset reconstruction", lattice_reconstruct));
  with_in(leaf(lattice, "stone", "Ultrafilter representation", lattice_stone));

  auto* steiner = app.add_subcommand("steiner", "Steiner systems");
  steiner->require_subcommand(1);
  steiner->fallthrough();
  with_pd(leaf(steiner, "build-pg", "Points and lines of PG(d,q)", steiner_build_pg),
          "-q");
  auto* ag = with_pd(
      leaf(steiner, "build-ag", "Points and lines of AG(d,q)", steiner_build_ag),
      "-q");
  ag->add_flag("--planes", o.planes, "Planes of AG(d,2) as a 3-system");
  with_in(leaf(steiner, "verify", "Verify the Steiner property", steiner_verify));
  auto* derive =
      with_in(leaf(steiner, "derive", "Derived system at a point", steiner_derive));
  derive->add_option("--point", o.point, "Point to derive at")->required();
  auto* aut = with_in(
      leaf(steiner, "autcheck", "Check that a group preserves blocks",
           steiner_autcheck));
  aut->add_option("--group", o.group_file, "Group JSON file")->required();

  auto* geometry = app.add_subcommand("geometry", "Projective geometry over GF(p)");
  geometry->require_subcommand(1);
  geometry->fallthrough();
  with_pd(leaf(geometry, "points", "Points of PG(d,p)", geometry_points), "-p");
  with_pd(leaf(geometry, "span", "Span closure", geometry_span), "-p")
      ->add_option("points", o.points, "Points, e.g. 0,1")
      ->required();
  with_pd(leaf(geometry, "pgl", "PGL(d+1,p) generators", geometry_pgl), "-p");
  with_pd(leaf(geometry, "subspaces", "Subspace lattice", geometry_subspaces),
          "-p");
  with_pd(leaf(geometry, "oracle-iso",
               "Compare fixsets of PGL with subspaces", geometry_oracle_iso),
          "-p");

  auto* va = app.add_subcommand("verify-all", "Run every verification check");
  va->fallthrough();
  va->callback([&] {
    command = "verify-all";
    handler = verify_all;
  });
  va->add_option("--only", o.only, "Check name or number (repeatable)");
  va->add_flag("--fail-fast", o.fail_fast, "Stop after the first failure");
  va->add_option("--inject-fault", o.inject_fault)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output result;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    result = handler(o);
  } catch (const UsageError& e) {
    err << "fixlat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "fixlat: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "fixlat: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "fixlat: capacity exceeded (" << e.cap() << ", limit " << e.limit()
        << ", reached " << e.reached() << "): " << e.what() << "\n";
    return kExitCapacity;
  } catch (const PreconditionError& e) {
    err << "fixlat: precondition failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "fixlat: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  const double ms =
      o.no_timing ? 0.0
                  : std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

  std::string body;
  if (o.format == "dot") {
    if (!result.dot) {
      err << "fixlat: " << command << " has no lattice to draw\n";
      return kExitUsage;
    }
    body = *result.dot;
  } else if (o.format == "text") {
    if (!result.text.empty()) {
      body = result.text;
    } else {
      std::ostringstream s;
      render_text(result.result, s, 0);
      body = s.str();
    }
  } else {
    body = dump_json(make_report({command, config_json(o), o.seed, ms},
                                 std::move(result.result)));
  }

  if (o.out.empty()) {
    out << body;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "fixlat: cannot write " << o.out << "\n";
      return kExitUsage;
    }
    f << body;
  }
  if (command == "verify-all" && o.format == "json" && !o.out.empty())
    err << result.text;
  return result.check_failed ? kExitCheckFailed : kExitOk;
}

}  // namespace fixlat
