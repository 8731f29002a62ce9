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


#include "brauer/endo.hpp"

#include <gtest/gtest.h>

#include "brauer/error.hpp"
#include "brauer/star_tilting.hpp"

namespace brauer {
namespace {

ProjComplex example_complex() {
  auto a = Algebra::from_tree(star_tree(4, 1).mirrored());
  StarFrame fr(a);
  Covering c{4, {interval_from_tuple(fr, {1, 2, 3, 4})},
             {{interval_from_tuple(fr, {2, 3, 4}), interval_from_tuple(fr, {2, 3})}}, CoveringMode::Deg1};
  c.normalize();
  return covering_to_complex(c, a);
}

std::vector<std::vector<int>> normalized(const std::vector<ACycle>& cycles) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cycles) {
    if (c.members.size() < 2) continue;
    auto m = c.members;
    std::rotate(m.begin(), std::min_element(m.begin(), m.end()), m.end());
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Endo, RegularComplexGivesTheTree) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k)
      for (const auto& g : enumerate_brauer_trees(n, k)) {
        auto r = endo_brauer_tree(regular_complex(Algebra::from_tree(g), 0));
        EXPECT_TRUE(isomorphic(r.tree, g)) << canonical_form(g);
      }
}

TEST(Endo, StarIdentity) {
  auto a = Algebra::star(4, 3);
  auto cycles = a_cycle_partition(regular_complex(a, 0));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_TRUE(cycles[0].exceptional);
  EXPECT_EQ(cycles[0].members, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(cycles[0].witness_checked);
}

TEST(Endo, CartanTableValues) {
  auto a = Algebra::star(3, 2);
  auto t = direct_sum({uniserial_presentation(a, {0, 1}), stalk(a, 1), stalk(a, 2)});
  auto c = endo_cartan(t);
  EXPECT_EQ(c[0][0], 2);
  EXPECT_EQ(c[1][2], 2);
  EXPECT_EQ(c[1][1], 3);
  EXPECT_THROW(endo_cartan(stalk(a, 0)), PreconditionError);
}

TEST(Endo, WorkedExampleQuiverAndTree) {
  auto t = example_complex();
  EndoAlgebra e(t);
  std::vector<std::string> names;
  for (int i = 0; i < e.size(); ++i) {
    const auto& l = e.label(i);
    names.push_back(l == "P4->P1" ? "a" : l == "P4->P2" ? "b" : l == "P3->P2" ? "c" : "d");
  }
  EXPECT_EQ(quiver_text(e, names), "d ⇄ a ⇄ b ⇄ c");
  auto r = endo_brauer_tree(t);
  BrauerTree line;
  line.vertices = {0, 1, 2, 3, 4};
  for (int i = 1; i <= 4; ++i) {
    line.edges.push_back({i, {i - 1, i}});
    line.cyclic_order[i - 1].push_back(i);
    line.cyclic_order[i].push_back(i);
  }
  line.multiplicity = 1;
  EXPECT_TRUE(isomorphic(r.tree, line));
  auto c = r.cartan;
  int nonzero = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (x != y && c[x][y]) ++nonzero;
  EXPECT_EQ(nonzero, 6);
}

TEST(Endo, SmallCovering) {
  auto a = Algebra::star(2, 1);
  Covering c{2, {{1, 2}}, {{}}, CoveringMode::Deg0};
  auto r = endo_brauer_tree(covering_to_complex(c, a));
  EXPECT_EQ(r.tree.num_edges(), 2u);
  EXPECT_EQ(r.tree.vertices.size(), 3u);
}

TEST(Endo, DecoderMatchesCaseAnalysis) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= 2; ++k) {
      auto s = Algebra::star(n, k);
      for (const auto& cv : enumerate_coverings(n)) {
        auto t = covering_to_complex(cv, s);
        EXPECT_EQ(normalized(a_cycle_partition(t)), star_cycle_prediction(t)) << cv.key();
        auto r = endo_brauer_tree(t);
        EXPECT_EQ(r.tree.num_edges(), static_cast<std::size_t>(n));
        EXPECT_EQ(r.tree.multiplicity, k);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            EXPECT_EQ(r.cartan[x][y], happel_pairing(t.summand(x), t.summand(y)));
        if (k >= 2) {
          for (const auto& cyc : r.cycles)
            if (cyc.exceptional)
              for (int m : cyc.members) EXPECT_EQ(t.summands()[m].label.kind, SummandLabel::Kind::Stalk);
        }
      }
    }
}

TEST(Endo, AutoequivalenceCoverings) {
  for (int n = 2; n <= 4; ++n) {
    auto s1 = Algebra::star(n, 1);
    auto s2 = Algebra::star(n, 2);
    int hits = 0;
    for (const auto& cv : enumerate_coverings(n)) {
      if (remark2_autoequivalence_check(cv, s1)) ++hits;
      EXPECT_FALSE(remark2_autoequivalence_check(cv, s2)) << cv.key();
    }
    EXPECT_EQ(hits, 2 * n);
    EXPECT_TRUE(remark2_autoequivalence_check(trivial_covering(n, CoveringMode::Deg0), s2));
  }
}

}  // namespace
}  // namespace brauer
