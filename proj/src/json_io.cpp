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

#include "fixlat/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#ifndef FIXLAT_VERSION_STRING
#define FIXLAT_VERSION_STRING "unknown"
#endif

namespace fixlat {
namespace {

[[noreturn]] void shape_error(const std::string& msg) { throw ParseError(msg); }

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) shape_error(std::string(what) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    shape_error(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t as_count(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    shape_error(what + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> as_counts(const Json& j, const std::string& what) {
  if (!j.is_array()) shape_error(what + ": expected an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_count(x, what));
  return out;
}

std::vector<std::string> labels_from(const Json& j, std::size_t expect,
                                     const char* what) {
  const auto it = j.find("labels");
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_array() || it->size() != expect)
    shape_error(std::string(what) + ": labels must be an array of " +
                std::to_string(expect) + " strings");
  std::vector<std::string> out;
  for (const auto& s : *it) {
    if (!s.is_string()) shape_error(std::string(what) + ": labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte after the offending character
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, byte);
    throw ParseError(source + ":" + std::to_string(line) + ":" +
                         std::to_string(col) + ": " + e.what(),
                     line, col);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const PointSet& s) { return Json(s.to_vector()); }

PointSet point_set_from_json(const Json& j, std::size_t universe) {
  PointSet out(universe);
  for (std::size_t x : as_counts(j, "point set")) {
    if (x >= universe)
      throw ValidationError("point " + std::to_string(x) +
                            " outside domain of size " +
                            std::to_string(universe));
    out.insert(static_cast<Point>(x));
  }
  return out;
}

PointSet parse_point_list(std::string_view text, std::size_t universe) {
  PointSet out(universe);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' ||
                               text[i] == '{' || text[i] == '}'))
      ++i;
  };
  for (skip(); i < text.size(); skip()) {
    std::size_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw ValidationError("bad point list \"" + std::string(text) + "\"");
    if (v >= universe)
      throw ValidationError("point " + std::to_string(v) +
                            " outside domain of size " +
                            std::to_string(universe));
    out.insert(static_cast<Point>(v));
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

GroupAction group_from_json(const Json& j, const Caps& caps) {
  const std::size_t n = as_count(field(j, "degree", "group"), "group degree");
  const Json& gens = field(j, "generators", "group");
  if (!gens.is_array()) shape_error("group: generators must be an array");
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    if (g.is_string()) {
      perms.push_back(Permutation::from_cycles(n, g.get<std::string>()));
    } else {
      const auto imgs = as_counts(g, "generator");
      std::vector<Point> p(imgs.begin(), imgs.end());
      if (p.size() != n)
        throw ValidationError("generator has " + std::to_string(p.size()) +
                              " images, degree is " + std::to_string(n));
      perms.emplace_back(std::move(p));
    }
  }
  return GroupAction(PermutationGroup(n, std::move(perms), caps),
                     labels_from(j, n, "group"));
}

Json to_json(const PermutationGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycles());
  return {{"degree", g.degree()}, {"generators", gens}};
}

Json to_json(const GroupAction& action) {
  Json j = to_json(action.group);
  if (!action.labels.empty()) j["labels"] = action.labels;
  return j;
}

std::vector<std::vector<bool>> leq_from_json(const Json& j) {
  const std::size_t n = as_count(field(j, "size", "lattice"), "lattice size");
  if (n > FiniteLattice::kMaxSize)
    throw CapacityError("lattice", FiniteLattice::kMaxSize, n,
                        "explicit lattice larger than " +
                            std::to_string(FiniteLattice::kMaxSize));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  if (const auto it = j.find("leq"); it != j.end()) {
    if (!it->is_array() || it->size() != n)
      shape_error("lattice: leq must be a size x size matrix");
    for (std::size_t a = 0; a < n; ++a) {
      const auto& row = (*it)[a];
      if (!row.is_array() || row.size() != n)
        shape_error("lattice: leq must be a size x size matrix");
      for (std::size_t b = 0; b < n; ++b) {
        if (row[b].is_boolean()) leq[a][b] = row[b].get<bool>();
        else leq[a][b] = as_count(row[b], "leq entry") != 0;
      }
    }
    return leq;
  }
  const Json& covers = field(j, "covers", "lattice");
  if (!covers.is_array()) shape_error("lattice: covers must be an array");
  std::vector<std::vector<std::size_t>> up(n);
  for (const auto& c : covers) {
    const auto pair = as_counts(c, "cover");
    if (pair.size() != 2) shape_error("lattice: each cover is a [lo, hi] pair");
    if (pair[0] >= n || pair[1] >= n)
      throw ValidationError("cover [" + std::to_string(pair[0]) + ", " +
                            std::to_string(pair[1]) + "] out of range");
    up[pair[0]].push_back(pair[1]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> stack{i};
    leq[i][i] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : up[x])
        if (!leq[i][y]) {
          leq[i][y] = true;
          stack.push_back(y);
        }
    }
  }
  return leq;
}

FiniteLattice lattice_from_json(const Json& j) {
  auto leq = leq_from_json(j);
  auto labels = labels_from(j, leq.size(), "lattice");
  return FiniteLattice::from_leq(std::move(leq), std::move(labels));
}

Json to_json(const FiniteLattice& l) {
  Json covers = Json::array();
  for (auto [lo, hi] : l.covers()) covers.push_back({lo, hi});
  Json j{{"size", l.size()}, {"covers", covers}};
  if (!l.labels().empty()) j["labels"] = l.labels();
  return j;
}

Json to_json(const SetLattice& l) {
  Json j = to_json(l.to_finite_lattice());
  j["universe"] = l.universe();
  Json elements = Json::array();
  for (std::size_t i = 0; i < l.size(); ++i) elements.push_back(to_json(l[i]));
  j["elements"] = elements;
  return j;
}

SteinerSystem steiner_from_json(const Json& j) {
  SteinerSystem s;
  s.k = as_count(field(j, "k", "steiner"), "steiner k");
  s.num_points = as_count(field(j, "points", "steiner"), "steiner points");
  const Json& blocks = field(j, "blocks", "steiner");
  if (!blocks.is_array()) shape_error("steiner: blocks must be an array");
  for (const auto& b : blocks) {
    const auto pts = as_counts(b, "block");
    s.blocks.emplace_back(pts.begin(), pts.end());
  }
  return s;
}

Json to_json(const SteinerSystem& s) {
  return {{"k", s.k}, {"points", s.num_points}, {"blocks", s.blocks}};
}

Json structure_to_json(const RelationalStructure& s, std::size_t max_tuples) {
  std::size_t total = 0;
  for (const auto& [arity, rels] : s.relations())
    for (const auto& r : rels) total += r.tuples.size();
  if (total > max_tuples)
    throw CapacityError("structure_dump", max_tuples, total,
                        "structure has " + std::to_string(total) +
                            " tuples, dump cap is " +
                            std::to_string(max_tuples));
  Json rels = Json::object();
  for (const auto& [arity, list] : s.relations()) {
    Json arr = Json::array();
    for (const auto& r : list) arr.push_back(r.tuples);
    rels[std::to_string(arity)] = arr;
  }
  return {{"domain_size", s.domain_size()},
          {"max_arity", s.max_arity()},
          {"relations", rels}};
}

std::string hasse_dot(const FiniteLattice& l, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Element e = 0; e < l.size(); ++e) {
    std::string label = l.label(e);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  n" << e << " [label=\"" << escaped << "\", rank=" << l.rank(e)
        << "];\n";
  }
  for (auto [lo, hi] : l.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

Json caps_to_json(const Caps& caps) {
  return {{"max_degree", caps.max_degree},
          {"exhaustive_order", caps.exhaustive_order},
          {"lattice_size", caps.lattice_size},
          {"max_arity", caps.max_arity},
          {"tuple_count", caps.tuple_count},
          {"lattice_automorphism_size", caps.lattice_automorphism_size},
          {"steiner_points", caps.steiner_points},
          {"projective_points", caps.projective_points}};
}

Json make_report(const ReportHeader& header, Json result) {
  return {{"tool", "fixlat"},
          {"version", FIXLAT_VERSION_STRING},
          {"command", header.command},
          {"config", header.config},
          {"seed", header.seed},
          {"wall_time_ms", header.wall_time_ms},
          {"result", std::move(result)}};
}

Json order_to_json(const BigInt& order) {
  if (order < (BigInt(1) << 53)) return order.convert_to<std::uint64_t>();
  return order.str();
}

}  // namespace fixlat
