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


#include "brauer/tree.hpp"

#include <gtest/gtest.h>

#include "brauer/error.hpp"

namespace brauer {
namespace {

BrauerTree path_tree(int n) {
  BrauerTree t;
  for (int v = 0; v <= n; ++v) t.vertices.push_back(v);
  for (int i = 1; i <= n; ++i) {
    t.edges.push_back({i, {i - 1, i}});
    t.cyclic_order[i - 1].push_back(i);
    t.cyclic_order[i].push_back(i);
  }
  return t;
}

TEST(BrauerTree, StarIsValid) {
  auto t = star_tree(4, 2);
  EXPECT_NO_THROW(t.validate());
  EXPECT_EQ(t.degree(0), 4);
  EXPECT_EQ(t.successor(0, 4), 1);
  EXPECT_EQ(t.predecessor(0, 1), 4);
  EXPECT_EQ(t.vertex_multiplicity(0), 2);
  EXPECT_EQ(t.vertex_multiplicity(3), 1);
}

TEST(BrauerTree, ValidationFailures) {
  auto t = star_tree(3, 1);
  t.edges.push_back({9, {1, 2}});
  t.cyclic_order[1].push_back(9);
  t.cyclic_order[2].push_back(9);
  EXPECT_THROW(t.validate(), InputError);  // cycle

  auto u = star_tree(3, 1);
  u.cyclic_order[0] = {1, 2};
  EXPECT_THROW(u.validate(), InputError);

  auto w = star_tree(2, 1);
  w.exceptional = 17;
  EXPECT_THROW(w.validate(), InputError);

  auto z = star_tree(2, 0 + 1);
  z.multiplicity = 0;
  EXPECT_THROW(z.validate(), InputError);
}

TEST(BrauerTree, MirrorReversesOrders) {
  auto t = star_tree(4, 1).mirrored();
  EXPECT_EQ(t.successor(0, 1), 4);
  EXPECT_EQ(t.successor(0, 4), 3);
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  auto a = star_tree(3, 2);
  BrauerTree b;
  b.vertices = {10, 11, 12, 13};
  b.edges = {{7, {13, 10}}, {8, {13, 11}}, {9, {13, 12}}};
  b.cyclic_order = {{13, {8, 9, 7}}, {10, {7}}, {11, {8}}, {12, {9}}};
  b.exceptional = 13;
  b.multiplicity = 2;
  EXPECT_TRUE(isomorphic(a, b));
  b.exceptional = 10;
  EXPECT_FALSE(isomorphic(a, b));
  b.multiplicity = 1;
  a.multiplicity = 1;
  EXPECT_TRUE(isomorphic(a, b));
}

TEST(CanonicalForm, DistinguishesPlaneEmbeddings) {
  // Two leaves of a 4-star each get a pendant edge: adjacent versus opposite.
  auto build = [](int second) {
    BrauerTree t = star_tree(4, 1);
    t.vertices.push_back(5);
    t.vertices.push_back(6);
    t.edges.push_back({5, {1, 5}});
    t.edges.push_back({6, {second, 6}});
    t.cyclic_order[1] = {1, 5};
    t.cyclic_order[second] = {second, 6};
    t.cyclic_order[5] = {5};
    t.cyclic_order[6] = {6};
    return t;
  };
  EXPECT_FALSE(isomorphic(build(2), build(3)));
  EXPECT_TRUE(isomorphic(build(2), build(4)));
}

TEST(CanonicalForm, PathMirrorIsIsomorphic) {
  auto p = path_tree(4);
  EXPECT_TRUE(isomorphic(p, p.mirrored()));
}

// Plane trees with n edges up to rotation (unrooted), and plane trees with a
// marked vertex. Reference values are the standard counting sequences.
TEST(Enumerate, PlaneTreeCounts) {
  const int unmarked[] = {1, 1, 2, 3, 6, 14};
  const int marked[] = {1, 2, 4, 10, 26};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_brauer_trees(n, 1, true).size(), unmarked[n - 1]) << n;
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_brauer_trees(n, 2).size(), marked[n - 1]) << n;
}

TEST(Enumerate, AllValid) {
  for (const auto& t : enumerate_brauer_trees(4, 3)) {
    EXPECT_NO_THROW(t.validate());
    EXPECT_EQ(t.num_edges(), 4u);
    EXPECT_EQ(t.multiplicity, 3);
  }
}

}  // namespace
}  // namespace brauer
