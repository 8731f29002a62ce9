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

#include "brauer/complex.hpp"
#include "brauer/linalg.hpp"
#include "brauer/tree.hpp"

namespace brauer {

/// End(T) for a basic complex T, assembled from the Hom spaces between its
/// indecomposable summands. Elements are quotient coordinates.
class EndoAlgebra {
 public:
  explicit EndoAlgebra(const ProjComplex& t);

  int size() const { return static_cast<int>(parts_.size()); }
  const ProjComplex& summand(int a) const { return parts_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const ChainMapSpace& hom(int a, int b) const { return homs_[a * size() + b]; }
  int dim(int a, int b) const { return hom(a, b).dim(); }
  const PrimeField& field() const { return field_; }
  bool is_stalk(int a) const { return parts_[a].summands().front().label.kind == SummandLabel::Kind::Stalk; }
  int multiplicity() const { return parts_.front().algebra().multiplicity(); }

  /// Class of (x then y) for x in Hom(a, b) and y in Hom(b, c).
  std::vector<Scalar> compose(int a, int b, int c, const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  const std::vector<std::vector<Scalar>>& radical(int a, int b) const { return rad_[a * size() + b]; }
  int radical_square_dim(int a, int b) const { return rad2_[a * size() + b]; }
  /// Representatives of rad / rad^2 in Hom(a, b).
  const std::vector<std::vector<Scalar>>& arrows(int a, int b) const { return arrows_[a * size() + b]; }

  std::vector<std::vector<int>> cartan() const;

 private:
  PrimeField field_;
  std::vector<ProjComplex> parts_;
  std::vector<std::string> labels_;
  std::vector<ChainMapSpace> homs_;
  std::vector<std::vector<std::vector<Scalar>>> rad_;
  std::vector<int> rad2_;
  std::vector<std::vector<std::vector<Scalar>>> arrows_;
};

std::vector<std::vector<int>> endo_cartan(const ProjComplex& t);

struct ACycle {
  std::vector<int> members;  // summand indices in cyclic order
  std::vector<std::string> labels;
  bool exceptional = false;
  int multiplicity = 1;
  /// Arrow representatives, one per step members[t] -> members[t+1].
  std::vector<std::vector<Scalar>> witness;
  bool witness_checked = false;
};

std::vector<ACycle> a_cycle_partition(const EndoAlgebra& e);
std::vector<ACycle> a_cycle_partition(const ProjComplex& t);

/// Cycles predicted from the shape of the summands of a two-term complex
/// over a star algebra. Only cycles with at least two members are listed.
std::vector<std::vector<int>> star_cycle_prediction(const ProjComplex& t);

struct EndoTree {
  BrauerTree tree;  // edge id a+1 is summand a
  std::vector<std::string> edge_labels;
  std::vector<ACycle> cycles;
  std::vector<std::vector<int>> cartan;
};

EndoTree endo_brauer_tree(const ProjComplex& t);

/// Arrows of the quiver of End(T) as text; a line of two-way arrows is drawn
/// as "a ⇄ b ⇄ c".
std::string quiver_text(const EndoAlgebra& e, const std::vector<std::string>& names);

struct Covering;
bool remark2_autoequivalence_check(const Covering& s, const Algebra& star);

}  // namespace brauer
