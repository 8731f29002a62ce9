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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/algebra.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

/// A left module given by one matrix per arrow over the algebra's prime field.
///
/// The space is graded by simples: M = sum_i e_i M. An arrow a from edge s
/// to edge t acts as a linear map e_t M -> e_s M, stored as a dims[s] x
/// dims[t] matrix (column vectors). The action of every basis element is
/// derived from the arrow words at construction.
class Representation {
 public:
  Representation(Algebra alg, std::vector<int> dims, std::vector<Matrix> arrow_action, std::string name = {},
                 bool check = true);

  const Algebra& algebra() const { return alg_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int simple) const { return dims_[simple]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const Matrix& arrow_action(std::size_t arrow_pos) const { return arrows_[arrow_pos]; }
  /// Action of basis element `idx` as a dims[source] x dims[target] matrix.
  const Matrix& action(std::size_t idx) const { return actions_[idx]; }
  /// Action of a general element of e_s A e_t (all terms in that block).
  Matrix action(const AlgElem& x, int s, int t) const;

  /// rho(a) rho(c) = rho(ac) for every arrow a and basis element c.
  bool satisfies_relations() const;

 private:
  Algebra alg_;
  std::vector<int> dims_;
  std::vector<Matrix> arrows_;
  std::vector<Matrix> actions_;
  std::string name_;
};

/// Module homomorphism M -> N, one dims_N[i] x dims_M[i] block per simple.
struct ModuleMap {
  std::vector<Matrix> blocks;
};

/// Top-to-socle description of a uniserial module over a star algebra.
struct UniserialSpec {
  int top = 0;  // simple index
  int length = 1;
  bool operator==(const UniserialSpec&) const = default;
  bool operator<(const UniserialSpec& o) const { return std::pair(top, length) < std::pair(o.top, o.length); }
};

Representation projective_rep(const Algebra& alg, int simple);
Representation simple_rep(const Algebra& alg, int simple);
Representation direct_sum(const std::vector<Representation>& parts);

/// Submodule spanned by per-block bases (vectors in e_i M coordinates).
Representation submodule(const Representation& m, const std::vector<std::vector<std::vector<Scalar>>>& basis);
/// Quotient by the submodule spanned by per-block bases.
Representation quotient(const Representation& m, const std::vector<std::vector<std::vector<Scalar>>>& basis);

/// P_top / rad^length P_top over a star algebra; factors read top to socle
/// descend against the star's cyclic order.
Representation uniserial(const Algebra& star, const UniserialSpec& spec);
/// Composition factors (simple indices) from top to socle.
std::vector<int> uniserial_factors(const Algebra& star, const UniserialSpec& spec);

/// String module of a walk. Letters are signed 1-based positions into
/// alg.arrows(): +a walks from the source of a to its target, -a walks back.
/// `start` is the simple where the walk begins (needed for the empty walk).
/// On the basis x_0..x_L along the walk, a direct letter a sends x_r to
/// x_(r-1) and an inverse letter sends x_(r-1) to x_r.
Representation string_module(const Algebra& alg, int start, const std::vector<int>& walk);

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);
ModuleMap compose(const PrimeField& f, const ModuleMap& first, const ModuleMap& second);
bool is_isomorphism(const PrimeField& f, const ModuleMap& map);

/// Exact for indecomposables: some basis map or a seeded random combination
/// must be invertible.
bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 1);

struct TopSocle {
  std::vector<int> top;
  std::vector<int> socle;
};
TopSocle top_and_socle(const Representation& m);
/// Per-block basis of rad M = sum of arrow images.
std::vector<std::vector<std::vector<Scalar>>> radical_basis(const Representation& m);

/// Split test: some composite P_i -> M -> P_i is invertible.
bool has_projective_summand(const Representation& m);

struct ProjectiveCover {
  std::vector<int> tops;            // simple of each generator, in block order
  Representation cover;             // direct sum of P_tops
  std::vector<Matrix> map;          // per block: dims_M[s] x dims_P[s]
  Representation kernel;            // Omega M
  std::vector<Matrix> embedding;    // per block: dims_P[s] x dims_K[s]
};
ProjectiveCover projective_cover(const Representation& m);

/// Omega M. Throws PreconditionError if M has a projective summand.
Representation syzygy(const Representation& m);

struct IndecomposableEntry {
  Representation module;
  bool projective = false;
  std::optional<UniserialSpec> uniserial;
  std::optional<std::pair<int, std::vector<int>>> walk;  // (start, letters)
};

/// Complete list of indecomposables up to isomorphism: uniserials over a star
/// algebra (any k), string modules plus projectives over a k = 1 tree.
std::vector<IndecomposableEntry> enumerate_indecomposables(const Algebra& alg);

}  // namespace brauer
