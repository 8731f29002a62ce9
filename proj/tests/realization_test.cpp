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


#include "brauer/realization.hpp"

#include <gtest/gtest.h>

#include "brauer/endo.hpp"
#include "brauer/error.hpp"
#include "brauer/star_tilting.hpp"

namespace brauer {
namespace {

BrauerTree path_tree(int edges, int k, int exceptional) {
  BrauerTree t;
  for (int v = 0; v <= edges; ++v) t.vertices.push_back(v);
  for (int i = 1; i <= edges; ++i) {
    t.edges.push_back({i, {i - 1, i}});
    t.cyclic_order[i - 1].push_back(i);
    t.cyclic_order[i].push_back(i);
  }
  t.exceptional = exceptional;
  t.multiplicity = k;
  return t;
}

TEST(Realization, StarLabels) {
  auto s = star_tree(5, 2);
  auto lab = label_brauer_tree(s);
  for (int e = 1; e <= 5; ++e) EXPECT_EQ(lab.label.at(e), e);
  auto t = realize(s);
  EXPECT_EQ(complex_key(t), complex_key(regular_complex(Algebra::star(5, 2), 0)));
}

TEST(Realization, SingleEdge) {
  auto lab = label_brauer_tree(star_tree(1, 3));
  EXPECT_EQ(lab.label.at(1), 1);
}

TEST(Realization, PathLabels) {
  // Root edge first, the child edge takes the odd-level rule j + 1 + 0.
  auto lab = label_brauer_tree(path_tree(2, 1, 0));
  EXPECT_EQ(lab.label.at(1), 1);
  EXPECT_EQ(lab.label.at(2), 2);
  auto four = label_brauer_tree(path_tree(4, 1, 0));
  EXPECT_EQ(four.label.at(1), 1);
  EXPECT_EQ(four.label.at(2), 4);
  EXPECT_EQ(four.label.at(3), 2);
  EXPECT_EQ(four.label.at(4), 3);
}

TEST(Realization, LabelsAreBijective) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_brauer_trees(n, 2)) {
      auto lab = label_brauer_tree(g);
      std::vector<int> seen(n + 1, 0);
      for (auto [e, l] : lab.label) {
        ASSERT_GE(l, 1);
        ASSERT_LE(l, n);
        ++seen[l];
      }
      for (int l = 1; l <= n; ++l) EXPECT_EQ(seen[l], 1);
    }
}

TEST(Realization, LinePath) {
  auto g = path_tree(4, 1, 0);
  auto t = realize(g);
  EXPECT_TRUE(is_tilting(t));
  EXPECT_TRUE(isomorphic(endo_brauer_tree(t).tree, g));
  auto g2 = path_tree(2, 2, 0);
  auto t2 = realize(g2);
  auto r2 = endo_brauer_tree(t2).tree;
  EXPECT_TRUE(isomorphic(r2, g2));
  EXPECT_FALSE(isomorphic(r2, path_tree(2, 2, 1)));
}

TEST(Realization, RoundTripBothDegrees) {
  for (int deg : {0, 1})
    for (int n = 1; n <= 5; ++n)
      for (int k = 1; k <= 2; ++k)
        for (const auto& g : enumerate_brauer_trees(n, k)) {
          auto t = realize(g, deg);
          EXPECT_EQ(static_cast<int>(t.summands().size()), n);
          for (const auto& s : t.summands())
            if (s.label.kind == SummandLabel::Kind::Stalk) EXPECT_EQ(s.label.degree, deg);
          EXPECT_TRUE(isomorphic(endo_brauer_tree(t).tree, g)) << canonical_form(g) << " deg " << deg;
        }
}

TEST(Realization, RejectsBadInput) {
  auto g = star_tree(3, 1);
  EXPECT_THROW(realize(g, 2), InputError);
  g.cyclic_order[0].pop_back();
  EXPECT_THROW(realize(g), InputError);
}

}  // namespace
}  // namespace brauer
