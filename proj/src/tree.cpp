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

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "brauer/error.hpp"

namespace brauer {

void BrauerTree::validate() const {
  if (multiplicity < 1) throw InputError("multiplicity must be at least 1");
  if (edges.empty()) throw InputError("a Brauer tree needs at least one edge");
  std::set<int> vset(vertices.begin(), vertices.end());
  if (vset.size() != vertices.size()) throw InputError("duplicate vertex id");
  if (edges.size() + 1 != vertices.size())
    throw InputError("not a tree: |edges| = " + std::to_string(edges.size()) +
                     " but |vertices| = " + std::to_string(vertices.size()));
  if (!vset.count(exceptional)) throw InputError("exceptional vertex " + std::to_string(exceptional) + " is not a vertex");
  std::set<int> eids;
  std::map<int, std::multiset<int>> incident;
  for (const auto& e : edges) {
    if (!eids.insert(e.id).second) throw InputError("duplicate edge id " + std::to_string(e.id));
    for (int v : e.ends)
      if (!vset.count(v)) throw InputError("edge " + std::to_string(e.id) + " has unknown endpoint " + std::to_string(v));
    if (e.ends[0] == e.ends[1]) throw InputError("edge " + std::to_string(e.id) + " is a loop");
    incident[e.ends[0]].insert(e.id);
    incident[e.ends[1]].insert(e.id);
  }
  // Connectivity via union-find; with |E| = |V| - 1 this makes it a tree.
  std::map<int, int> parent;
  for (int v : vertices) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : edges) parent[find(e.ends[0])] = find(e.ends[1]);
  int root = find(vertices.front());
  for (int v : vertices)
    if (find(v) != root) throw InputError("not a tree: graph is disconnected");
  for (int v : vertices) {
    auto it = cyclic_order.find(v);
    std::multiset<int> listed;
    if (it != cyclic_order.end()) listed.insert(it->second.begin(), it->second.end());
    if (listed != incident[v])
      throw InputError("cyclic_order at vertex " + std::to_string(v) + " does not list exactly its incident edges");
  }
  for (const auto& [v, order] : cyclic_order)
    if (!vset.count(v)) throw InputError("cyclic_order given for unknown vertex " + std::to_string(v));
}

std::size_t BrauerTree::edge_index(int edge_id) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == edge_id) return i;
  throw InputError("unknown edge id " + std::to_string(edge_id));
}

int BrauerTree::other_end(int edge_id, int vertex) const {
  const auto& e = edge(edge_id);
  if (e.ends[0] == vertex) return e.ends[1];
  if (e.ends[1] == vertex) return e.ends[0];
  throw InputError("edge " + std::to_string(edge_id) + " is not incident to vertex " + std::to_string(vertex));
}

int BrauerTree::degree(int vertex) const {
  auto it = cyclic_order.find(vertex);
  return it == cyclic_order.end() ? 0 : static_cast<int>(it->second.size());
}

int BrauerTree::successor(int vertex, int edge_id) const {
  const auto& order = cyclic_order.at(vertex);
  auto it = std::find(order.begin(), order.end(), edge_id);
  if (it == order.end()) throw InputError("edge not at vertex");
  ++it;
  return it == order.end() ? order.front() : *it;
}

int BrauerTree::predecessor(int vertex, int edge_id) const {
  const auto& order = cyclic_order.at(vertex);
  auto it = std::find(order.begin(), order.end(), edge_id);
  if (it == order.end()) throw InputError("edge not at vertex");
  return it == order.begin() ? order.back() : *std::prev(it);
}

BrauerTree BrauerTree::mirrored() const {
  BrauerTree m = *this;
  for (auto& [v, order] : m.cyclic_order) std::reverse(order.begin(), order.end());
  return m;
}

BrauerTree star_tree(int n, int k) {
  if (n < 1) throw InputError("star needs n >= 1");
  if (k < 1) throw InputError("star needs k >= 1");
  BrauerTree t;
  t.vertices.push_back(0);
  for (int i = 1; i <= n; ++i) {
    t.vertices.push_back(i);
    t.edges.push_back({i, {0, i}});
    t.cyclic_order[0].push_back(i);
    t.cyclic_order[i] = {i};
  }
  t.exceptional = 0;
  t.multiplicity = k;
  return t;
}

namespace {

std::string encode(const BrauerTree& t, int vertex, int parent_edge, bool mark) {
  std::string s = "(";
  if (mark && vertex == t.exceptional) s += '*';
  const auto& order = t.cyclic_order.at(vertex);
  int e = t.successor(vertex, parent_edge);
  for (std::size_t i = 1; i < order.size(); ++i) {
    s += encode(t, t.other_end(e, vertex), e, mark);
    e = t.successor(vertex, e);
  }
  s += ')';
  return s;
}

}  // namespace

std::string canonical_form(const BrauerTree& tree, bool ignore_exceptional) {
  bool mark = !ignore_exceptional;
  std::string best;
  bool have = false;
  for (int root : tree.vertices) {
    const auto& order = tree.cyclic_order.at(root);
    for (std::size_t rot = 0; rot < order.size(); ++rot) {
      // Encode the root's children starting from edge order[rot].
      std::string s = "(";
      if (mark && root == tree.exceptional) s += '*';
      int e = order[rot];
      for (std::size_t i = 0; i < order.size(); ++i) {
        s += encode(tree, tree.other_end(e, root), e, mark);
        e = tree.successor(root, e);
      }
      s += ')';
      if (!have || s < best) {
        best = s;
        have = true;
      }
    }
  }
  return "k=" + std::to_string(tree.multiplicity) + ":" + best;
}

bool isomorphic(const BrauerTree& a, const BrauerTree& b) {
  if (a.num_edges() != b.num_edges() || a.multiplicity != b.multiplicity) return false;
  bool ignore = a.multiplicity == 1;
  return canonical_form(a, ignore) == canonical_form(b, ignore);
}

namespace {

// Labelled trees on vertices 0..m-1 from Pruefer sequences.
std::vector<std::vector<std::pair<int, int>>> labelled_trees(int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (m == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  int len = m - 2;
  std::vector<int> seq(len, 0);
  while (true) {
    std::vector<int> deg(m, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<int> d = deg;
    for (int x : seq) {
      int leaf = 0;
      while (d[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      --d[leaf];
      --d[x];
    }
    int u = -1, w = -1;
    for (int v = 0; v < m; ++v)
      if (d[v] == 1) (u < 0 ? u : w) = v;
    edges.emplace_back(u, w);
    std::sort(edges.begin(), edges.end());
    out.push_back(edges);
    int pos = len - 1;
    while (pos >= 0 && seq[pos] == m - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

}  // namespace

std::vector<BrauerTree> enumerate_brauer_trees(int n, int k, bool ignore_exceptional) {
  if (n < 1) throw InputError("need at least one edge");
  std::map<std::string, BrauerTree> seen;
  for (const auto& shape : labelled_trees(n + 1)) {
    BrauerTree base;
    for (int v = 0; v <= n; ++v) base.vertices.push_back(v);
    for (int i = 0; i < n; ++i) {
      base.edges.push_back({i + 1, {shape[i].first, shape[i].second}});
      base.cyclic_order[shape[i].first].push_back(i + 1);
      base.cyclic_order[shape[i].second].push_back(i + 1);
    }
    base.multiplicity = k;
    // Iterate over all cyclic orders: permutations of each vertex list with
    // its first entry fixed.
    std::vector<int> verts = base.vertices;
    std::function<void(std::size_t, BrauerTree&)> rec = [&](std::size_t vi, BrauerTree& t) {
      if (vi == verts.size()) {
        for (int exc : t.vertices) {
          t.exceptional = exc;
          auto key = canonical_form(t, ignore_exceptional);
          if (!seen.count(key)) seen.emplace(key, t);
          if (ignore_exceptional) break;
        }
        return;
      }
      auto& order = t.cyclic_order[verts[vi]];
      std::sort(order.begin() + 1, order.end());
      do {
        rec(vi + 1, t);
      } while (std::next_permutation(order.begin() + 1, order.end()));
    };
    rec(0, base);
  }
  std::vector<BrauerTree> out;
  for (auto& [key, t] : seen) out.push_back(t);
  return out;
}

}  // namespace brauer
