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


#pragma once

#include <map>
#include <string>
#include <vector>

namespace brauer {

struct TreeEdge {
  int id = 0;
  int ends[2] = {0, 0};
};

/// A tree with a cyclic ordering of the edges around every vertex, one
/// exceptional vertex and its multiplicity.
///
/// The cyclic order of a vertex lists its incident edge ids; the successor of
/// the last entry is the first. Composition series of projectives follow this
/// stored direction (see Algebra).
struct BrauerTree {
  std::vector<int> vertices;
  std::vector<TreeEdge> edges;
  std::map<int, std::vector<int>> cyclic_order;
  int exceptional = 0;
  int multiplicity = 1;

  std::size_t num_edges() const { return edges.size(); }

  /// Throws InputError naming the violated invariant.
  void validate() const;

  std::size_t edge_index(int edge_id) const;
  const TreeEdge& edge(int edge_id) const { return edges[edge_index(edge_id)]; }
  int other_end(int edge_id, int vertex) const;
  int degree(int vertex) const;
  /// m_v: the multiplicity at the exceptional vertex, 1 elsewhere.
  int vertex_multiplicity(int vertex) const { return vertex == exceptional ? multiplicity : 1; }
  /// Next edge after `edge_id` in the cyclic order at `vertex`.
  int successor(int vertex, int edge_id) const;
  int predecessor(int vertex, int edge_id) const;

  /// Same tree with every cyclic order reversed.
  BrauerTree mirrored() const;
};

/// All edges at the exceptional centre, cyclic order 1, 2, ..., n; the centre
/// has id 0 and leaves have ids 1..n (leaf i carries edge i).
BrauerTree star_tree(int n, int k);

/// Canonical string of a Brauer tree up to isomorphism preserving cyclic
/// orders. The exceptional mark and multiplicity are part of the form unless
/// `ignore_exceptional` is set (used when k = 1 where the mark is immaterial).
std::string canonical_form(const BrauerTree& tree, bool ignore_exceptional = false);

/// Isomorphism of Brauer trees. The exceptional vertex is compared only when
/// the multiplicity exceeds 1; multiplicities must always agree.
bool isomorphic(const BrauerTree& a, const BrauerTree& b);

/// Every Brauer tree with n edges up to isomorphism: all shapes, all cyclic
/// orders and all exceptional placements. With `ignore_exceptional` the
/// placement is not distinguished (one representative per k = 1 algebra).
std::vector<BrauerTree> enumerate_brauer_trees(int n, int k, bool ignore_exceptional = false);

}  // namespace brauer
