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

#include <functional>

#include "brauer/error.hpp"

namespace brauer {

TreeLabeling label_brauer_tree(const BrauerTree& tree, ChildOrder order) {
  tree.validate();
  auto children = [&](int v, int up) {
    std::vector<int> out;
    const auto& ord = tree.cyclic_order.at(v);
    if (up == 0) return ord;
    int e = up;
    for (std::size_t i = 1; i < ord.size(); ++i) {
      e = order == ChildOrder::Successor ? tree.successor(v, e) : tree.predecessor(v, e);
      out.push_back(e);
    }
    return out;
  };
  std::map<int, int> below;  // edge -> edges strictly below its lower end
  std::function<int(int, int)> count = [&](int v, int up) {
    int total = 0;
    for (int e : children(v, up)) {
      int c = count(tree.other_end(e, v), e);
      below[e] = c;
      total += c + 1;
    }
    return total;
  };
  count(tree.exceptional, 0);

  TreeLabeling out;
  // Labels of all edges below v fill [start, start + size).
  std::function<void(int, int, int, int)> assign = [&](int v, int up, int level, int start) {
    int next = start;
    for (int e : children(v, up)) {
      int w = tree.other_end(e, v);
      out.parent[e] = up;
      out.level[e] = level + 1;
      if (level % 2 == 0) {
        out.label[e] = next;
        assign(w, e, level + 1, next + 1);
      } else {
        assign(w, e, level + 1, next);
        out.label[e] = next + below[e];
      }
      next += below[e] + 1;
    }
  };
  assign(tree.exceptional, 0, 0, 1);
  return out;
}

ProjComplex realize(const BrauerTree& tree, int degree, Scalar prime) {
  if (degree != 0 && degree != 1) throw InputError("stalk degree must be 0 or 1");
  const int n = static_cast<int>(tree.num_edges());
  Algebra star = Algebra::star(n, tree.multiplicity, prime);
  // The degree-1 version dualises a degree-0 realization of the mirror image,
  // reflecting the star by p -> -p to return to the same algebra.
  const BrauerTree& src = degree == 0 ? tree : tree.mirrored();
  TreeLabeling lab = label_brauer_tree(src);
  const auto& order = star.star_order();
  auto simple_of = [&](int label) {
    int p = label - 1;
    if (degree == 1) p = (n - p) % n;
    return order[p];
  };
  auto pres = [&](int from, int to) {
    // P_from -> P_to, presenting the uniserial with top `to`.
    int length = ((to - from) % n + n) % n;
    if (degree == 1) std::swap(from, to);
    return uniserial_presentation(star, {simple_of(to), length});
  };
  std::vector<ProjComplex> parts;
  for (const auto& edge : src.edges) {
    int e = edge.id;
    int up = lab.parent.at(e);
    int lvl = lab.level.at(e);
    if (up == 0)
      parts.push_back(stalk(star, simple_of(lab.label.at(e)), degree));
    else if (lvl % 2 == 0)
      parts.push_back(pres(lab.label.at(up), lab.label.at(e)));
    else
      parts.push_back(pres(lab.label.at(e), lab.label.at(up)));
  }
  return direct_sum(parts);
}

}  // namespace brauer
