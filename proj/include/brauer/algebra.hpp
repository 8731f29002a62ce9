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

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/tree.hpp"

namespace brauer {

enum class PathKind { Idempotent, Proper, Socle };

/// One basis element of a Brauer tree algebra.
///
/// Paths compose left to right: the product pq runs along p and then q, so a
/// proper path from edge i to edge j lies in e_i A e_j. A proper path winds
/// around a single vertex in the direction of its stored cyclic order; the
/// two full windings at an edge are one class, the socle element z_i.
struct PathClass {
  PathKind kind = PathKind::Idempotent;
  int winding_vertex = -1;  // proper paths only
  int start_edge = 0;       // edge ids
  int end_edge = 0;
  int length = 0;

  bool operator==(const PathClass&) const = default;
  std::string to_string() const;
};

/// Sparse element of the algebra: (basis index, coefficient) pairs sorted by index.
using AlgElem = std::vector<std::pair<std::size_t, Scalar>>;

class Algebra {
 public:
  static Algebra from_tree(const BrauerTree& tree, Scalar prime = kDefaultPrime);
  /// Brauer star with arrows alpha_i : i -> i+1 (indices mod n).
  static Algebra star(int n, int k, Scalar prime = kDefaultPrime);

  const BrauerTree& tree() const { return impl_->tree; }
  const PrimeField& field() const { return impl_->field; }
  int num_simples() const { return impl_->n; }
  int multiplicity() const { return impl_->tree.multiplicity; }
  std::size_t dim() const { return impl_->basis.size(); }

  /// Simple modules are indexed 0..n-1 in tree edge order; these convert to
  /// and from the tree's edge ids.
  int edge_id(int simple) const { return impl_->tree.edges[simple].id; }
  int simple_of_edge(int edge_id) const;

  const PathClass& basis(std::size_t idx) const { return impl_->basis[idx]; }
  std::optional<std::size_t> index_of(const PathClass& p) const;
  /// Start and end simple of a basis element.
  int source(std::size_t idx) const { return impl_->source[idx]; }
  int target(std::size_t idx) const { return impl_->target[idx]; }

  /// Basis product, or nullopt when the product is zero.
  std::optional<std::size_t> product(std::size_t a, std::size_t b) const {
    int r = impl_->table[a * impl_->basis.size() + b];
    return r < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(r));
  }

  /// Basis of e_from A e_to: paths starting at `from` and ending at `to`.
  const std::vector<std::size_t>& block(int from, int to) const { return impl_->blocks[from * impl_->n + to]; }
  /// Position of a basis element inside its block.
  std::size_t block_position(std::size_t idx) const { return impl_->block_pos[idx]; }

  std::size_t idempotent(int simple) const { return impl_->idempotents[simple]; }
  std::size_t socle(int simple) const { return impl_->socles[simple]; }

  /// Basis elements spanning rad A / rad^2 A.
  const std::vector<std::size_t>& arrows() const { return impl_->arrows; }
  /// Expression of a basis element as a product of arrows (positions into arrows()).
  const std::vector<std::size_t>& arrow_word(std::size_t idx) const { return impl_->words[idx]; }

  /// cartan[i][j] = dim e_j A e_i (symmetric).
  const std::vector<std::vector<int>>& cartan() const { return impl_->cartan; }
  int projective_dim(int simple) const;

  /// True when every edge meets the exceptional vertex.
  bool is_star() const { return impl_->is_star; }
  /// Cyclic order of simples around the star centre (requires is_star()).
  const std::vector<int>& star_order() const;

  std::optional<PathClass> compose(const PathClass& p, const PathClass& q) const;
  /// Maps P_i -> P_j, realised as right multiplication by e_i A e_j.
  std::vector<PathClass> hom_proj_basis(int i, int j) const;

  AlgElem multiply(const AlgElem& a, const AlgElem& b) const;
  AlgElem add(const AlgElem& a, const AlgElem& b) const;
  AlgElem scale(const AlgElem& a, Scalar s) const;
  AlgElem unit(std::size_t idx, Scalar c = 1) const { return c ? AlgElem{{idx, c}} : AlgElem{}; }

  /// Exhaustive check of (ab)c = a(bc) on basis triples.
  bool check_associative() const;

  bool same_as(const Algebra& o) const { return impl_ == o.impl_; }
  /// Same algebra data over a different prime.
  Algebra with_prime(Scalar prime) const { return from_tree(impl_->tree, prime); }

 private:
  struct Impl {
    BrauerTree tree;
    PrimeField field{kDefaultPrime};
    int n = 0;
    bool is_star = false;
    std::vector<int> star_order;
    std::vector<PathClass> basis;
    std::vector<int> source, target;
    std::vector<int> table;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_pos;
    std::vector<std::size_t> idempotents, socles;
    std::vector<std::size_t> arrows;
    std::vector<std::vector<std::size_t>> words;
    std::vector<std::vector<int>> cartan;
  };
  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace brauer
