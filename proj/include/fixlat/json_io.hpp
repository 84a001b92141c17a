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

#ifndef FIXLAT_JSON_IO_HPP_
#define FIXLAT_JSON_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fixlat/config.hpp"
#include "fixlat/error.hpp"
#include "fixlat/fol.hpp"
#include "fixlat/lattice.hpp"
#include "fixlat/perm_group.hpp"
#include "fixlat/set_lattice.hpp"
#include "fixlat/steiner.hpp"

namespace fixlat {

using Json = nlohmann::json;

// Malformed JSON text or a document that does not match the expected shape.
// Line and column are 1-based; both are 0 for shape errors.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : ValidationError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline.
std::string dump_json(const Json& j);

Json to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j, std::size_t universe);
// "0,1,5" or "{0,1,5}"
PointSet parse_point_list(std::string_view text, std::size_t universe);

// { "degree": n, "generators": [[images...] | "(0 1)(2 3)", ...],
//   "labels": [...] (optional) }
GroupAction group_from_json(const Json& j, const Caps& caps = default_caps());
Json to_json(const GroupAction& action);
Json to_json(const PermutationGroup& g);

// { "size": n, "covers": [[lo, hi], ...], "labels": [...] (optional) }.
// A "leq" matrix is accepted in place of covers.
FiniteLattice lattice_from_json(const Json& j);
// Order relation only, for validation reports on inputs that may not be
// lattices.
std::vector<std::vector<bool>> leq_from_json(const Json& j);
Json to_json(const FiniteLattice& l);
// Lattice shape plus "universe" and "elements" as sorted point lists.
Json to_json(const SetLattice& l);

// { "k": k, "points": n, "blocks": [[...], ...] }
SteinerSystem steiner_from_json(const Json& j);
Json to_json(const SteinerSystem& s);

// { "domain_size", "max_arity", "relations": { "2": [[tuple...], ...] } }.
// Throws CapacityError when the total tuple count exceeds max_tuples.
Json structure_to_json(const RelationalStructure& s, std::size_t max_tuples);

std::string hasse_dot(const FiniteLattice& l, const std::string& name = "L");

Json caps_to_json(const Caps& caps);

struct ReportHeader {
  std::string command;
  Json config;
  std::uint64_t seed = 0;
  double wall_time_ms = 0;
};
Json make_report(const ReportHeader& header, Json result);

// Group orders fit a JSON number up to 2^53; larger values are strings.
Json order_to_json(const BigInt& order);

}  // namespace fixlat

#endif  // FIXLAT_JSON_IO_HPP_
