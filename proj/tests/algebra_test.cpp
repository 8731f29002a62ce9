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


#include "brauer/algebra.hpp"

#include <gtest/gtest.h>

#include "brauer/error.hpp"

namespace brauer {
namespace {

// Cartan matrix of a Brauer tree algebra computed straight from the tree:
// c_ii = 2 + sum over both ends of (m_v - 1), c_ij = m_v at a shared end.
std::vector<std::vector<int>> cartan_oracle(const BrauerTree& t) {
  const std::size_t n = t.num_edges();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        c[i][i] = 2;
        for (int v : t.edges[i].ends) c[i][i] += t.vertex_multiplicity(v) - 1;
        continue;
      }
      for (int v : t.edges[i].ends)
        for (int w : t.edges[j].ends)
          if (v == w) c[i][j] += t.vertex_multiplicity(v);
    }
  return c;
}

TEST(Algebra, StarDimensionAndCartan) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto a = Algebra::star(n, k);
      EXPECT_EQ(a.dim(), static_cast<std::size_t>(n * n * k + n)) << n << "," << k;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) EXPECT_EQ(a.cartan()[i][j], i == j ? k + 1 : k);
      EXPECT_TRUE(a.is_star());
      EXPECT_EQ(a.arrows().size(), static_cast<std::size_t>(n));
    }
}

TEST(Algebra, TreeCartanMatchesOracle) {
  for (int n = 1; n <= 4; ++n)
    for (int k : {1, 2})
      for (const auto& t : enumerate_brauer_trees(n, k)) {
        auto a = Algebra::from_tree(t);
        EXPECT_EQ(a.cartan(), cartan_oracle(t)) << canonical_form(t);
        EXPECT_TRUE(a.check_associative());
      }
}

TEST(Algebra, CartanIsSymmetric) {
  for (const auto& t : enumerate_brauer_trees(5, 2)) {
    auto a = Algebra::from_tree(t);
    for (int i = 0; i < a.num_simples(); ++i)
      for (int j = 0; j < a.num_simples(); ++j) EXPECT_EQ(a.cartan()[i][j], a.cartan()[j][i]);
  }
}

TEST(Algebra, StarProducts) {
  auto a = Algebra::star(3, 2);
  // alpha_1 alpha_2 is the path 1 -> 3 of length 2; six steps give z_1.
  PathClass a1{PathKind::Proper, 0, 1, 2, 1};
  PathClass a2{PathKind::Proper, 0, 2, 3, 1};
  auto p = a.compose(a1, a2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->start_edge, 1);
  EXPECT_EQ(p->end_edge, 3);
  EXPECT_EQ(p->length, 2);
  PathClass five{PathKind::Proper, 0, 2, 1, 5};
  auto z = a.compose(a1, five);
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->kind, PathKind::Socle);
  EXPECT_EQ(z->start_edge, 1);
  PathClass two{PathKind::Proper, 0, 1, 3, 2};
  EXPECT_FALSE(a.compose(*z, a1).has_value());
  EXPECT_FALSE(a.compose(a2, a1).has_value());  // endpoints do not meet
  PathClass foreign{PathKind::Proper, 7, 1, 2, 1};
  EXPECT_THROW(a.compose(foreign, a1), InputError);
  (void)two;
}

TEST(Algebra, MixedVertexProductsVanish) {
  // Path of two edges: 1 = (0,1), 2 = (1,2); vertex 1 winds twice.
  BrauerTree t;
  t.vertices = {0, 1, 2};
  t.edges = {{1, {0, 1}}, {2, {1, 2}}};
  t.cyclic_order = {{0, {1}}, {1, {1, 2}}, {2, {2}}};
  t.exceptional = 0;
  t.multiplicity = 3;
  auto a = Algebra::from_tree(t);
  // Edge 1: loop of length 3 at vertex 0 and winding of length 2 at vertex 1.
  EXPECT_EQ(a.cartan()[0][0], 4);
  EXPECT_EQ(a.cartan()[0][1], 1);
  EXPECT_EQ(a.cartan()[1][1], 2);
  PathClass loop{PathKind::Proper, 0, 1, 1, 1};
  PathClass step{PathKind::Proper, 1, 1, 2, 1};
  EXPECT_FALSE(a.compose(loop, step).has_value());
  auto z = a.compose(loop, PathClass{PathKind::Proper, 0, 1, 1, 2});
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->kind, PathKind::Socle);
  auto z2 = a.compose(step, PathClass{PathKind::Proper, 1, 2, 1, 1});
  ASSERT_TRUE(z2.has_value());
  EXPECT_EQ(*z, *z2);
}

TEST(Algebra, ArrowWordsMultiplyOut) {
  for (const auto& t : enumerate_brauer_trees(3, 2)) {
    auto a = Algebra::from_tree(t);
    for (std::size_t idx = 0; idx < a.dim(); ++idx) {
      if (a.basis(idx).kind == PathKind::Idempotent) continue;
      const auto& w = a.arrow_word(idx);
      std::size_t acc = a.arrows()[w.front()];
      for (std::size_t s = 1; s < w.size(); ++s) {
        auto r = a.product(acc, a.arrows()[w[s]]);
        ASSERT_TRUE(r.has_value());
        acc = *r;
      }
      EXPECT_EQ(acc, idx);
    }
  }
}

TEST(Algebra, SingleEdge) {
  auto a = Algebra::star(1, 1);
  EXPECT_EQ(a.dim(), 2u);
  ASSERT_EQ(a.arrows().size(), 1u);
  EXPECT_EQ(a.basis(a.arrows()[0]).kind, PathKind::Socle);
  auto b = Algebra::star(1, 3);
  EXPECT_EQ(b.dim(), 4u);
}

TEST(Algebra, HomProjectiveBasis) {
  auto a = Algebra::star(4, 1);
  EXPECT_EQ(a.hom_proj_basis(0, 2).size(), 1u);
  EXPECT_EQ(a.hom_proj_basis(1, 1).size(), 2u);
  EXPECT_THROW(a.hom_proj_basis(0, 4), InputError);
}

TEST(Algebra, ElementArithmetic) {
  auto a = Algebra::star(2, 1, 5);
  auto x = a.add(a.unit(a.idempotent(0)), a.unit(a.arrows()[0], 2));
  auto y = a.multiply(x, x);
  // (e + 2a)^2 = e + 2a because e a = a while a e = 0 and a a = 0.
  EXPECT_EQ(y, x);
  EXPECT_TRUE(a.add(x, a.scale(x, 4)).empty());
}

}  // namespace
}  // namespace brauer
