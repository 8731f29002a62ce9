// Copyright 2026 The brauer-tilt Authors. All Rights Reserved.
//
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

#include "brauer/io.hpp"

#include <gtest/gtest.h>

#include "brauer/error.hpp"

namespace brauer {
namespace {

std::string data(const std::string& name) { return std::string(BRAUER_TEST_DATA) + "/" + name; }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Io, StarShorthand) {
  auto a = Algebra::from_tree(tree_from_json(read_json_file(data("star_2_1.json"))));
  EXPECT_EQ(a.cartan(), (std::vector<std::vector<int>>{{2, 1}, {1, 2}}));
  auto b = Algebra::from_tree(tree_from_json(read_json_file(data("star_1_3.json"))));
  EXPECT_EQ(b.dim(), 4u);
}

TEST(Io, TreeRoundTrip) {
  for (auto t : {star_tree(3, 2), star_tree(4, 1).mirrored()}) {
    auto back = tree_from_json(parse_json_text(tree_to_json(t).dump()));
    EXPECT_TRUE(isomorphic(t, back));
    EXPECT_EQ(canonical_form(t), canonical_form(back));
  }
}

TEST(Io, SchemaErrorsNameTheField) {
  EXPECT_NE(error_of([] { parse_json_text("{\"a\": [1,\n 2,,]}", "t.json"); }).find("t.json:2:"), std::string::npos);
  EXPECT_NE(error_of([] { tree_from_json(Json::parse(R"({"vertices":[0,1],"edges":[{"id":1}]})")); })
                .find("/edges/0"),
            std::string::npos);
  EXPECT_FALSE(error_of([] { tree_from_json(read_json_file(data("bad_cyclic_order.json"))); }).empty());
  EXPECT_THROW(read_json_file(data("missing.json")), InputError);
}

TEST(Io, ModulesAndComplexes) {
  auto a = Algebra::star(3, 1);
  auto u = module_from_json(a, Json::parse(R"({"uniserial":{"top":1,"len":2}})"));
  EXPECT_EQ(u.module.total_dim(), 2);
  EXPECT_THROW(module_from_json(a, Json::parse(R"({"uniserial":{"top":9,"len":2}})")), InputError);
  auto c = complex_from_json(a, Json::parse(R"({"summands":[
      {"pres":{"uniserial":{"top":1,"len":2}},"degree":0},
      {"pres":{"uniserial":{"top":1,"len":1}},"degree":0},
      {"stalk":{"edge":2,"degree":0}}]})"));
  EXPECT_EQ(c.summands().size(), 3u);
  auto j = complex_to_json(c);
  EXPECT_EQ(j["summands"].size(), 3u);
  EXPECT_EQ(complex_key(c), complex_key(complex_from_json(a, j)));
}

TEST(Io, CoveringForms) {
  auto a = Algebra::from_tree(star_tree(4, 1).mirrored());
  auto c = covering_from_json(a, read_json_file(data("example1_covering.json")));
  EXPECT_EQ(c.mode, CoveringMode::Deg1);
  ASSERT_EQ(c.outer.size(), 1u);
  EXPECT_EQ(c.inner[0].size(), 2u);
  auto back = covering_from_json(a, covering_to_json(a, c));
  EXPECT_EQ(back.key(), c.key());

  auto s = Algebra::star(2, 1);
  auto small = covering_from_json(s, read_json_file(data("case2_n2.json")));
  EXPECT_EQ(small.outer[0].size, 2);
  EXPECT_THROW(covering_from_json(s, Json::parse(R"({"outer":[{"start":1,"size":2}],"mode":"sideways"})")),
               InputError);
}

TEST(Io, DotMarksExceptionalVertex) {
  auto dot = tree_to_dot(star_tree(2, 3));
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
  EXPECT_NE(dot.find("graph"), std::string::npos);
}

}  // namespace
}  // namespace brauer
