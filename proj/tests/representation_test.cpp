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


#include "brauer/representation.hpp"

#include <gtest/gtest.h>

#include "brauer/error.hpp"

namespace brauer {
namespace {

int pred(const Algebra& a, int s, int steps = 1) {
  const auto& order = a.star_order();
  const int n = static_cast<int>(order.size());
  int pos = static_cast<int>(std::find(order.begin(), order.end(), s) - order.begin());
  return order[(((pos - steps) % n) + n) % n];
}

TEST(Representation, ProjectiveDims) {
  for (int k : {1, 2}) {
    auto a = Algebra::star(4, k);
    for (int i = 0; i < 4; ++i) {
      auto p = projective_rep(a, i);
      EXPECT_TRUE(p.satisfies_relations());
      for (int j = 0; j < 4; ++j) EXPECT_EQ(p.dim(j), a.cartan()[j][i]);
      auto ts = top_and_socle(p);
      for (int j = 0; j < 4; ++j) {
        EXPECT_EQ(ts.top[j], j == i ? 1 : 0);
        EXPECT_EQ(ts.socle[j], j == i ? 1 : 0);
      }
    }
  }
}

TEST(Representation, RejectsBrokenRelations) {
  auto a = Algebra::star(2, 1);
  // Both arrows nonzero on a 1+1 dimensional space makes alpha_1 alpha_2 act
  // as the identity on S_1, but alpha_1 alpha_2 = z_1 must then equal
  // alpha_1 alpha_2 alpha_1 alpha_2 = 0.
  std::vector<Matrix> mats(2, Matrix(1, 1));
  mats[0](0, 0) = 1;
  mats[1](0, 0) = 1;
  EXPECT_THROW(Representation(a, {1, 1}, mats), InputError);
  EXPECT_THROW(Representation(a, {1, 1}, {Matrix(1, 2), Matrix(1, 1)}), InputError);
}

TEST(Representation, UniserialFactorsDescend) {
  auto a = Algebra::star(4, 1);
  auto f = uniserial_factors(a, {0, 4});
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], 0);
  EXPECT_EQ(f[1], 3);
  EXPECT_EQ(f[2], 2);
  EXPECT_EQ(f[3], 1);
  auto u = uniserial(a, {0, 2});
  EXPECT_EQ(u.name(), "(1,4)");
  auto ts = top_and_socle(u);
  EXPECT_EQ(ts.top, (std::vector<int>{1, 0, 0, 0}));
  EXPECT_EQ(ts.socle, (std::vector<int>{0, 0, 0, 1}));
  EXPECT_THROW(uniserial(a, {0, 6}), InputError);
  EXPECT_THROW(uniserial(a, {0, 0}), InputError);
}

TEST(Representation, HomFromProjectiveIsEvaluation) {
  auto a = Algebra::star(3, 2);
  for (const auto& e : enumerate_indecomposables(a))
    for (int i = 0; i < 3; ++i) EXPECT_EQ(hom_dim(projective_rep(a, i), e.module), e.module.dim(i));
}

TEST(Representation, HomIsAdditive) {
  auto a = Algebra::star(3, 1);
  auto m = uniserial(a, {0, 2});
  auto n = uniserial(a, {2, 3});
  auto l = uniserial(a, {1, 1});
  EXPECT_EQ(hom_dim(direct_sum({m, n}), l), hom_dim(m, l) + hom_dim(n, l));
  EXPECT_EQ(hom_dim(l, direct_sum({m, n, m})), 2 * hom_dim(l, m) + hom_dim(l, n));
}

TEST(Representation, SyzygyOfUniserials) {
  for (int k : {1, 2}) {
    const int n = 4;
    auto a = Algebra::star(n, k);
    const int w = n * k;
    for (int i = 0; i < n; ++i)
      for (int l = 1; l <= w; ++l) {
        auto u = uniserial(a, {i, l});
        EXPECT_FALSE(has_projective_summand(u));
        auto om = syzygy(u);
        auto expect = uniserial(a, {pred(a, i, l), w + 1 - l});
        EXPECT_TRUE(is_isomorphic(om, expect)) << i << " " << l;
        if (k == 1) {
          auto om2 = syzygy(om);
          EXPECT_TRUE(is_isomorphic(om2, uniserial(a, {pred(a, i), l})));
        }
      }
  }
}

TEST(Representation, ProjectiveCoverIsSurjective) {
  auto a = Algebra::star(3, 2);
  auto m = direct_sum({uniserial(a, {0, 3}), uniserial(a, {2, 5})});
  auto pc = projective_cover(m);
  EXPECT_EQ(pc.tops, (std::vector<int>{0, 2}));
  for (int s = 0; s < 3; ++s) {
    EXPECT_EQ(rank(a.field(), pc.map[s]), static_cast<std::size_t>(m.dim(s)));
    EXPECT_EQ(pc.kernel.dim(s) + m.dim(s), pc.cover.dim(s));
  }
}

// A module has P_i as a summand exactly when its socle element z_i acts
// nontrivially.
TEST(Representation, ProjectiveSummandAgreesWithSocleAction) {
  auto a = Algebra::star(3, 2);
  std::vector<Representation> mods;
  for (const auto& e : enumerate_indecomposables(a)) mods.push_back(e.module);
  for (std::size_t x = 0; x < mods.size(); x += 3)
    for (std::size_t y = 1; y < mods.size(); y += 4) {
      auto m = direct_sum({mods[x], mods[y]});
      bool acts = false;
      for (int i = 0; i < 3; ++i) acts |= !m.action(a.socle(i)).is_zero();
      EXPECT_EQ(has_projective_summand(m), acts);
    }
}

TEST(Representation, StringModules) {
  auto a = Algebra::star(4, 1);
  // Arrow 1 runs from edge 1 to edge 2; it acts e_2 M -> e_1 M, so the
  // string on that single arrow is generated in degree 2.
  auto m = string_module(a, 0, {1});
  auto ts = top_and_socle(m);
  EXPECT_EQ(ts.top, (std::vector<int>{0, 1, 0, 0}));
  EXPECT_EQ(ts.socle, (std::vector<int>{1, 0, 0, 0}));
  EXPECT_TRUE(is_isomorphic(m, uniserial(a, {1, 2})));
  EXPECT_TRUE(is_isomorphic(string_module(a, 1, {-1}), m));
  // Four consecutive arrows make z_1, which is zero in the string algebra.
  EXPECT_THROW(string_module(a, 0, {1, 2, 3, 4}), InputError);
  EXPECT_THROW(string_module(a, 0, {1, -1}), InputError);
  EXPECT_THROW(string_module(a, 0, {2}), InputError);
  EXPECT_THROW(string_module(a, 0, {9}), InputError);
}

TEST(Representation, StarIndecomposableCount) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k) {
      auto a = Algebra::star(n, k);
      auto list = enumerate_indecomposables(a);
      EXPECT_EQ(list.size(), static_cast<std::size_t>(n * n * k + n));
      int proj = 0;
      for (const auto& e : list) proj += e.projective;
      EXPECT_EQ(proj, n);
    }
}

BrauerTree line(int n) {
  BrauerTree t;
  for (int v = 0; v <= n; ++v) t.vertices.push_back(v);
  for (int i = 1; i <= n; ++i) {
    t.edges.push_back({i, {i - 1, i}});
    t.cyclic_order[i - 1].push_back(i);
    t.cyclic_order[i].push_back(i);
  }
  t.exceptional = 0;
  return t;
}

// Brauer tree algebras with e edges and multiplicity one have exactly e^2
// non-projective indecomposables, all of them string modules.
TEST(Representation, TreeStringCount) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : enumerate_brauer_trees(n, 1)) {
      auto a = Algebra::from_tree(t);
      if (a.is_star()) continue;
      auto list = enumerate_indecomposables(a);
      int nonproj = 0;
      for (const auto& e : list) nonproj += !e.projective;
      EXPECT_EQ(nonproj, n * n) << canonical_form(t);
    }
}

TEST(Representation, TreeStringsPairwiseDistinct) {
  auto a = Algebra::from_tree(line(3));
  auto list = enumerate_indecomposables(a);
  for (std::size_t x = 0; x < list.size(); ++x) {
    EXPECT_EQ(list[x].module.name().empty(), false);
    for (std::size_t y = x + 1; y < list.size(); ++y) EXPECT_FALSE(is_isomorphic(list[x].module, list[y].module));
  }
}

TEST(Representation, UnsupportedClassThrows) {
  auto t = line(3);
  t.multiplicity = 2;
  EXPECT_THROW(enumerate_indecomposables(Algebra::from_tree(t)), PreconditionError);
}

TEST(Representation, QuotientAndSubmodule) {
  auto a = Algebra::star(3, 1);
  auto p = projective_rep(a, 0);
  auto rad = radical_basis(p);
  auto r = submodule(p, rad);
  auto top = quotient(p, rad);
  EXPECT_EQ(r.total_dim(), p.total_dim() - 1);
  EXPECT_TRUE(r.satisfies_relations());
  EXPECT_TRUE(is_isomorphic(top, simple_rep(a, 0)));
  EXPECT_TRUE(is_isomorphic(r, uniserial(a, {2, 3})));
}

}  // namespace
}  // namespace brauer
