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
#include "brauer/representation.hpp"

namespace brauer {

/// Matrix of algebra elements describing a map between sums of projectives.
///
/// Row r stands for P_{row_proj[r]} and column c for P_{col_proj[c]}; entry
/// (r, c) lies in e_{row} A e_{col} and acts by right multiplication. Maps
/// compose as row vectors: applying F and then G is the product F G.
struct AlgMatrix {
  std::vector<int> row_proj;
  std::vector<int> col_proj;
  std::vector<AlgElem> entries;  // row-major

  AlgMatrix() = default;
  AlgMatrix(std::vector<int> rows, std::vector<int> cols)
      : row_proj(std::move(rows)), col_proj(std::move(cols)), entries(row_proj.size() * col_proj.size()) {}

  std::size_t rows() const { return row_proj.size(); }
  std::size_t cols() const { return col_proj.size(); }
  AlgElem& at(std::size_t r, std::size_t c) { return entries[r * cols() + c]; }
  const AlgElem& at(std::size_t r, std::size_t c) const { return entries[r * cols() + c]; }
  bool is_zero() const;
};

AlgMatrix multiply(const Algebra& alg, const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix add(const Algebra& alg, const AlgMatrix& a, const AlgMatrix& b);

/// Declared indecomposable summand of a complex.
struct SummandLabel {
  enum class Kind { Presentation, Stalk };
  Kind kind = Kind::Stalk;
  int simple = -1;  // stalk projective
  int degree = 0;   // stalk degree, or the degree of P^0 for a presentation
  std::optional<UniserialSpec> uniserial;
  std::optional<std::pair<int, std::vector<int>>> walk;
  std::string module_name;
  std::string text;  // display form, e.g. "P4->P1" or "P1@1"

  bool operator==(const SummandLabel& o) const {
    return kind == o.kind && simple == o.simple && degree == o.degree && uniserial == o.uniserial && walk == o.walk &&
           (uniserial || walk || kind == Kind::Stalk || module_name == o.module_name);
  }
};

struct Summand {
  SummandLabel label;
  std::vector<std::vector<std::size_t>> positions;  // per degree from lowest(), indices into that term
};

/// Bounded complex of projectives with cohomological grading: the
/// differential of degree r maps the degree-r term to the degree-(r+1) term.
class ProjComplex {
 public:
  ProjComplex(Algebra alg, int lowest, std::vector<std::vector<int>> terms, std::vector<AlgMatrix> differentials,
              std::vector<Summand> summands = {});

  const Algebra& algebra() const { return alg_; }
  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  /// Projectives in degree r (empty outside the range).
  const std::vector<int>& term(int degree) const;
  /// Differential from degree r to r + 1.
  AlgMatrix differential(int degree) const;
  const std::vector<Summand>& summands() const { return summands_; }
  std::size_t num_projectives() const;

  /// All differential entries lie in the radical.
  bool is_minimal() const;
  /// X[s] with X[s]^r = X^(r+s).
  ProjComplex shifted(int s) const;
  /// The subcomplex of one declared summand.
  ProjComplex summand(std::size_t idx) const;
  std::string describe() const;

 private:
  Algebra alg_;
  int lowest_ = 0;
  std::vector<std::vector<int>> terms_;
  std::vector<AlgMatrix> diffs_;
  std::vector<Summand> summands_;
};

ProjComplex stalk(const Algebra& alg, int simple, int degree = 0);
/// A as a stalk complex in the given degree, one label per projective.
ProjComplex regular_complex(const Algebra& alg, int degree = 0);
ProjComplex direct_sum(const std::vector<ProjComplex>& parts);

/// Minimal projective presentation P^0 -> P^1 of M placed in degrees
/// (degree, degree + 1). Throws PreconditionError if M has a projective summand.
ProjComplex min_proj_presentation(const Representation& m, int degree = 0);
/// Presentation that also admits projective summands of M; they appear in
/// degree + 1 only.
ProjComplex projective_presentation(const Representation& m, int degree = 0);
ProjComplex uniserial_presentation(const Algebra& star, const UniserialSpec& spec, int degree = 0);
ProjComplex presentation_of(const IndecomposableEntry& entry, int degree = 0);

/// Hom_{K^b(A)}(Q, R[s]): chain maps Q^r -> R^(r+s) modulo null-homotopic ones.
class ChainMapSpace {
 public:
  ChainMapSpace(const ProjComplex& q, const ProjComplex& r, int shift);

  int dim() const { return static_cast<int>(quotient_.size()); }
  std::size_t num_unknowns() const { return unknowns_; }
  std::size_t chain_dim() const { return chain_.size(); }
  std::size_t homotopy_rank() const { return homotopy_rank_; }
  const std::vector<std::vector<Scalar>>& chain_basis() const { return chain_; }
  /// Chain maps whose classes form a basis of the quotient.
  const std::vector<std::vector<Scalar>>& quotient_basis() const { return quotient_; }

  /// Components phi^r for r = q.lowest() .. q.highest().
  std::vector<AlgMatrix> components(const std::vector<Scalar>& coords) const;
  std::vector<Scalar> coordinates(const std::vector<AlgMatrix>& comps) const;
  bool is_chain_map(const std::vector<Scalar>& coords) const;
  bool is_null_homotopic(const std::vector<Scalar>& coords) const;
  /// Coordinates of the class of a chain map in quotient_basis().
  std::vector<Scalar> reduce(const std::vector<Scalar>& coords) const;

  const ProjComplex& source() const { return q_; }
  const ProjComplex& target() const { return r_; }
  int shift() const { return shift_; }

 private:
  struct Entry {
    int degree;
    std::size_t row, col;
    int from, to;  // simples
    std::size_t offset;
  };
  ProjComplex q_, r_;
  int shift_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> entry_index_;  // per degree of q, row-major
  std::size_t unknowns_ = 0;
  Matrix chain_system_;

  const Entry* entry(int degree, std::size_t row, std::size_t col) const;
  std::vector<std::vector<Scalar>> chain_;
  std::vector<std::vector<Scalar>> homotopy_basis_;  // independent null-homotopic maps
  std::size_t homotopy_rank_ = 0;
  std::vector<std::vector<Scalar>> quotient_;
  Matrix reduce_system_;  // columns: homotopy basis, then quotient representatives
};

int hom_complex_dim(const ProjComplex& q, const ProjComplex& r, int shift);

/// Composite of chain maps (shift 0 in the second factor's target frame):
/// first lies in Hom(X, Y[s]), second in Hom(Y, Z[t]); the result is in
/// Hom(X, Z[s+t]) given by phi^r then psi^(r+s).
std::vector<Scalar> compose_chain_maps(const ChainMapSpace& first, const std::vector<Scalar>& a,
                                       const ChainMapSpace& second, const std::vector<Scalar>& b,
                                       const ChainMapSpace& result);

/// Scalar (idempotent-coefficient) matrix of one component.
Matrix scalar_part(const Algebra& alg, const AlgMatrix& m);
/// Isomorphism of minimal complexes: some basis chain map has invertible
/// scalar parts in every degree.
bool complexes_isomorphic(const ProjComplex& x, const ProjComplex& y);

bool is_partial_tilting(const ProjComplex& t);
/// Number of pairwise nonisomorphic declared summands.
int count_isoclasses(const ProjComplex& t);
/// Partial tilting with n pairwise nonisomorphic summands. Throws InputError
/// when the complex carries no summand labels.
bool is_tilting(const ProjComplex& t);

/// Hom_{K^b}(T, M) for a two-term T and M in T's lowest degree: maps
/// P^0 -> M modulo those factoring through the differential.
int hom_to_module(const ProjComplex& t, const Representation& m);
bool prop1_check(const Representation& m);
bool prop2_stalk_check(const Representation& m, int simple, int degree);

/// The alternating sum of Hom dimensions between terms.
int happel_pairing(const ProjComplex& q, const ProjComplex& r);

/// Cokernel of the differential of a two-term complex.
Representation cokernel(const ProjComplex& t);
/// Minimal presentation of the cokernel plus projective stalks in the lowest
/// degree, dropping contractible pieces.
ProjComplex decompose_two_term(const ProjComplex& t);

}  // namespace brauer
