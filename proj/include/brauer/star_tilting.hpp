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

#include <string>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/complex.hpp"
#include "brauer/representation.hpp"

namespace brauer {

/// Positions 0..n-1 around the centre of a star algebra, in the stored
/// cyclic order. Position p + 1 follows p; the arrow from position p ends at
/// position p + 1.
class StarFrame {
 public:
  explicit StarFrame(const Algebra& star);

  int n() const { return static_cast<int>(order_.size()); }
  int simple_at(int pos) const { return order_[mod(pos)]; }
  int position_of(int simple) const { return pos_of_simple_.at(simple); }
  int edge_at(int pos) const { return edges_[mod(pos)]; }
  int position_of_edge(int edge_id) const;
  int succ(int pos, int steps = 1) const { return mod(pos + steps); }
  int pred(int pos, int steps = 1) const { return mod(pos - steps); }

 private:
  int mod(int p) const {
    int n = this->n();
    return ((p % n) + n) % n;
  }
  std::vector<int> order_;
  std::vector<int> pos_of_simple_;
  std::vector<int> edges_;
};

/// The positions start, start + 1, ..., start + size - 1 (mod n).
struct CyclicInterval {
  int start = 0;
  int size = 1;

  int last(int n) const { return (start + size - 1) % n; }
  bool contains(int pos, int n) const { return ((pos - start) % n + n) % n < size; }
  std::vector<int> positions(int n) const;

  bool operator==(const CyclicInterval&) const = default;
  bool operator<(const CyclicInterval& o) const { return std::pair(start, size) < std::pair(o.start, o.size); }
};

enum class CoveringMode { Deg0, Deg1 };

/// Covering of the n-gon by distinguished intervals. In Deg0 mode every
/// outer interval of size > 1 distinguishes its start and stalks sit in
/// degree 0; in Deg1 mode the last position is distinguished and stalks sit
/// in degree 1.
struct Covering {
  int n = 0;
  std::vector<CyclicInterval> outer;
  std::vector<std::vector<CyclicInterval>> inner;  // aligned with outer
  CoveringMode mode = CoveringMode::Deg0;

  bool is_trivial() const;
  /// Throws InputError naming the violated condition.
  void validate() const;
  /// Sorts outer intervals and their inner families.
  void normalize();
  std::string key() const;
  /// The n intervals of the covering: outers, inners and distinguished singletons.
  std::vector<CyclicInterval> all_intervals() const;
};

Covering trivial_covering(int n, CoveringMode mode);
/// Every nontrivial covering in both modes, in canonical order.
std::vector<Covering> enumerate_coverings(int n);

/// An interval of size r > 1 starting at j and ending at i gives the
/// presentation P_j -> P_i of the uniserial (i, ..., j + 1).
UniserialSpec interval_module(const StarFrame& frame, const CyclicInterval& iv);
ProjComplex covering_to_complex(const Covering& s, const Algebra& star);

/// Descending tuple (i, i - 1, ..., j) of edge ids in the frame; each entry
/// must precede the previous one in the cyclic order.
CyclicInterval interval_from_tuple(const StarFrame& frame, const std::vector<int>& edges);
std::vector<int> interval_tuple(const StarFrame& frame, const CyclicInterval& iv);

/// Presentations of two uniserials of length < n are orthogonal iff the
/// supports {i, ..., j - 1} are disjoint or nested.
bool compatible_pres(const Algebra& star, const UniserialSpec& m1, const UniserialSpec& m2);
bool compatible_stalk(const Algebra& star, const UniserialSpec& m, int simple, int degree);

/// Sorted summand labels of a labelled complex.
std::string complex_key(const ProjComplex& t);

struct BruteForceResult {
  std::vector<ProjComplex> complexes;  // sorted by complex_key
  std::size_t catalog_size = 0;
  std::size_t cliques = 0;
};

/// All basic two-term tilting complexes in degrees 0 and 1, by pairwise
/// orthogonality pruning over presentations of short uniserials and stalks,
/// then a full tilting check. Throws PreconditionError beyond n <= max_n,
/// k <= max_k.
BruteForceResult enumerate_two_term_tilting_bruteforce(const Algebra& star, int max_n = 5, int max_k = 2);

}  // namespace brauer
