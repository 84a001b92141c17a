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

#include "doctest.h"
#include "fixlat/closure.hpp"
#include "fixlat/json_io.hpp"
#include "fixtures.hpp"

using namespace fixlat;

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json("{\n  \"a\": 1,\n  \"b\": ]\n}", "t.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()).rfind("t.json:3:8", 0) == 0);
  }
}

TEST_CASE("point lists") {
  CHECK(parse_point_list("0,1, 5", 6) == PointSet(6, {0, 1, 5}));
  CHECK(parse_point_list("{2,3}", 6) == PointSet(6, {2, 3}));
  CHECK(parse_point_list("", 6).empty());
  CHECK_THROWS_AS(parse_point_list("0,x", 6), ValidationError);
  CHECK_THROWS_AS(parse_point_list("7", 6), ValidationError);
  CHECK(point_set_from_json(Json({4, 1}), 5) == PointSet(5, {1, 4}));
}

TEST_CASE("group files") {
  const Json j{{"degree", 4}, {"generators", {"(0 1 2 3)", {1, 0, 2, 3}}},
               {"labels", {"a", "b", "c", "d"}}};
  const auto act = group_from_json(j);
  CHECK(act.group.order() == 24);
  CHECK(act.labels[2] == "c");
  CHECK(group_from_json(to_json(act)).group.same_group_as(act.group));
  CHECK_THROWS_AS(group_from_json(Json{{"degree", 4}, {"generators", {{1, 0}}}}),
                  ValidationError);
  CHECK_THROWS_AS(group_from_json(Json{{"degree", -1}, {"generators", Json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(group_from_json(Json{{"degree", 3}, {"generators", Json::array()},
                                       {"labels", {"x"}}}),
                  ParseError);
}

TEST_CASE("lattice files") {
  const auto m4 = m_lattice(4);
  const auto j = to_json(m4);
  const auto back = lattice_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.size() == 6);
  // leq matrix form
  Json leq = Json::array();
  for (Element a = 0; a < 3; ++a) {
    Json row = Json::array();
    for (Element b = 0; b < 3; ++b) row.push_back(a <= b);
    leq.push_back(row);
  }
  CHECK(lattice_from_json(Json{{"size", 3}, {"leq", leq}}).size() == 3);
  CHECK_THROWS_AS(lattice_from_json(Json{{"size", 2}, {"covers", {{0, 5}}}}),
                  ValidationError);
  // cycle in covers: not antisymmetric
  CHECK_THROWS_AS(lattice_from_json(Json{{"size", 2}, {"covers", {{0, 1}, {1, 0}}}}),
                  ValidationError);

  const auto fix = enumerate_fixset_lattice(fixlat::testing::fano_group());
  const auto fj = to_json(fix);
  CHECK(fj["elements"].size() == 16);
  CHECK(fj["elements"][8] == Json({0, 1, 2}));
  CHECK(fj["universe"] == 7);
}

TEST_CASE("steiner files and structure dump") {
  const Json s{{"k", 2}, {"points", 7}, {"blocks", {{0, 1, 2}, {0, 3, 4}}}};
  CHECK(to_json(steiner_from_json(s)) == s);
  CHECK_THROWS_AS(steiner_from_json(Json{{"k", 2}, {"blocks", Json::array()}}),
                  ParseError);

  const auto st = canonical_structure(fixlat::testing::fano_group(), 3);
  const auto dump = structure_to_json(st, 1000);
  CHECK(dump["relations"]["3"].size() == 2);
  CHECK(dump["relations"]["2"].size() == 1);
  CHECK(dump["relations"]["2"][0].size() == 42);
  CHECK_THROWS_AS(structure_to_json(st, 100), CapacityError);
}

TEST_CASE("hasse diagram") {
  const auto dot = hasse_dot(chain_lattice(3), "c3");
  CHECK(dot.find("digraph \"c3\"") == 0);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n2;") != std::string::npos);
  CHECK(dot.find("n0 -> n2;") == std::string::npos);
}

TEST_CASE("orders") {
  CHECK(order_to_json(BigInt(120)) == 120);
  CHECK(order_to_json(symmetric_group(25).order()).is_string());
}
